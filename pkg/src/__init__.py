"""Paquete raiz del laboratorio de exploracion por efecto final (E3D)."""
