"""Tests unitarios de routers, graficos y linea de comandos."""
