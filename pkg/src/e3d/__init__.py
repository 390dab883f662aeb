"""Laboratorio de exploracion por impulso de efecto final (E3D).

Aprendizaje por refuerzo tabular con acciones compuestas de lazo abierto
en un mundo de dos habitaciones, comparado contra las lineas base de
politica uniforme y epsilon-greedy.
"""
