"""Adaptador de linea de comandos (argparse)."""
