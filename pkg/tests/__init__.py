"""Paquete de tests del laboratorio E3D."""
