"""
Interface de linha de comando (lote, não interativa).
"""
