"""Puertos (interfaces) que la infraestructura debe implementar."""
