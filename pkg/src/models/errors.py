"""
Exceções de domínio compartilhadas pelos serviços.
"""


class NotAHomomorphismError(ValueError):
    """O quociente não respeita algum relator da apresentação."""


class TorsionCheckError(ValueError):
    """O critério de núcleo livre de torção falhou onde um recobrimento foi pedido."""


class CompressionError(ValueError):
    """Uma órbita de polígonos menor que 2m_ij apareceu durante a compressão."""


class SizeCapExceeded(ValueError):
    """Um grupo ou órbita ultrapassou o limite de tamanho configurado."""


class HypothesisFailure(RuntimeError):
    """Uma hipótese do pipeline não foi satisfeita."""
