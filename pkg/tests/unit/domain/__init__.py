"""Tests unitarios del mundo en grilla y los value objects."""
