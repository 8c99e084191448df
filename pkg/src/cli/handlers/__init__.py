"""
Handlers dos subcomandos: cada um recebe a configuração e os serviços e devolve
o artefato a ser emitido.
"""
