"""
Toolkit de incoerência de grupos de Coxeter.
"""
