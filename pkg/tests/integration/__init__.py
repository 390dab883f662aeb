"""Tests de integracion: archivos de salida y API HTTP."""
