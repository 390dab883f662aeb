"""Capa de infraestructura: adaptadores de archivos, graficos, API y CLI."""
