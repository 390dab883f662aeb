"""Adaptador HTTP (FastAPI): routers, schemas y conversores."""
