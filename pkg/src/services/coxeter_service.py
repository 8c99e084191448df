"""
Serviço para apresentações de Coxeter: característica de Euler, subgrupos e dimensão.
"""
import itertools
import logging
from fractions import Fraction
from typing import Iterable, Optional, Tuple

from src.models.coxeter import CoxeterPresentation

logger = logging.getLogger(__name__)


class CoxeterService:
    """
    Operações sobre apresentações de Coxeter.
    """

    def uniform(self, r: int, m: int) -> CoxeterPresentation:
        """
        Cria a apresentação G_(r,m) de expoente uniforme.

        Args:
            r: Posto (número de geradores)
            m: Expoente comum a todos os pares

        Returns:
            Apresentação com todos os m_ij = m
        """
        if r < 1:
            raise ValueError(f"Posto deve ser >= 1, recebido {r}")
        if m < 2:
            raise ValueError(f"Expoente deve ser >= 2, recebido {m}")
        exponents = {(i, j): m for i, j in itertools.combinations(range(1, r + 1), 2)}
        return CoxeterPresentation(rank=r, exponents=exponents)

    def euler_characteristic(self, p: CoxeterPresentation) -> Fraction:
        """
        χ(G) = 1 - r/2 + Σ_{m_ij < ∞} 1/(2 m_ij), exato.
        """
        chi = 1 - Fraction(p.rank, 2)
        for _, _, m in p.finite_pairs():
            chi += Fraction(1, 2 * m)
        return chi

    def chi_of_uniform(self, r: int, m: int) -> Fraction:
        return 1 - Fraction(r, 2) + Fraction(r * (r - 1), 4 * m)

    def coxeter_subgroup(self, p: CoxeterPresentation, subset: Iterable[int]) -> CoxeterPresentation:
        """
        Subgrupo de Coxeter gerado por um subconjunto dos geradores.

        Os geradores escolhidos são renumerados 1..k preservando a ordem.

        Args:
            p: Apresentação original
            subset: Índices dos geradores (1-based)

        Returns:
            Apresentação restrita ao subconjunto
        """
        chosen = sorted(set(subset))
        if not chosen:
            raise ValueError("Subconjunto de geradores vazio")
        for index in chosen:
            if index not in p.generators:
                raise ValueError(f"Gerador inexistente: {index}")
        relabel = {old: new for new, old in enumerate(chosen, start=1)}
        exponents = {}
        for i, j in itertools.combinations(chosen, 2):
            m = p.exponent(i, j)
            if m is not None:
                exponents[(relabel[i], relabel[j])] = m
        return CoxeterPresentation(rank=len(chosen), exponents=exponents)

    def dimension_witness(self, p: CoxeterPresentation) -> Optional[Tuple[int, int, int]]:
        """
        Primeira tripla i<j<k com 1/m_ij + 1/m_jk + 1/m_ki > 1, ou None.
        """
        for i, j, k in itertools.combinations(p.generators, 3):
            total = Fraction(0)
            for a, b in ((i, j), (j, k), (i, k)):
                m = p.exponent(a, b)
                if m is not None:
                    total += Fraction(1, m)
            if total > 1:
                return i, j, k
        return None

    def has_dimension_at_most_2(self, p: CoxeterPresentation) -> bool:
        """
        Verdadeiro quando todo subgrupo de 3 geradores é infinito
        (curvatura seccional planar não positiva).
        """
        witness = self.dimension_witness(p)
        if witness is not None:
            logger.debug(f"Tripla {witness} viola a condição de dimensão <= 2")
        return witness is None
