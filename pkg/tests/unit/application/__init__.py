"""Tests unitarios de politica, aprendizaje, oraculo y metricas."""
