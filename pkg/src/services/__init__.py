"""
Serviços do toolkit: uma classe por etapa do pipeline.
"""
