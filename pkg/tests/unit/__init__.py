"""Tests unitarios por capa del laboratorio E3D."""
