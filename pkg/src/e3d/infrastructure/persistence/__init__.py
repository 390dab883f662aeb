"""Adaptadores de persistencia de resultados."""
