"""Graficos matplotlib de los resultados de experimentos."""
