"""Capa de dominio: modelos, puertos y excepciones del laboratorio."""
