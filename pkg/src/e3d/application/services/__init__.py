"""Servicios de aplicacion que implementan el aprendizaje y las metricas."""
