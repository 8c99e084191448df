"""
Tipos de domínio do toolkit de incoerência de grupos de Coxeter.
"""
