"""
Serviço de curvatura combinatória de 2-complexos angulados e critérios de
curvatura seccional.
"""
import itertools
import logging
from fractions import Fraction
from typing import List

import networkx as nx

from src.models.complex import LinkEdge, TwoComplex
from src.models.coxeter import CoxeterPresentation
from src.models.curvature import (
    AngledComplex,
    BruteForceSection,
    CurvatureReport,
    QuasiconvexVerdict,
    SectionalVerdict,
    SectionSpec,
)
from src.models.errors import SizeCapExceeded
from src.services.complex_service import ComplexService
from src.services.coxeter_service import CoxeterService

logger = logging.getLogger(__name__)

# Maior link aceito pela enumeração exaustiva de seções.
BRUTE_FORCE_LINK_CAP = 7


class CurvatureService:
    """
    Curvaturas κ(f), κ(y) e κ(s), todas em unidades de π.
    """
    def __init__(self, coxeter_svc: CoxeterService, complex_svc: ComplexService):
        self.coxeter_svc = coxeter_svc
        self.complex_svc = complex_svc

    def regular_euclidean_angles(self, k: TwoComplex) -> AngledComplex:
        """
        Métrica de polígonos euclidianos regulares: cada canto de um n-ágono recebe (n-2)π/n.
        """
        angles = {}
        for cell in k.two_cells:
            n = len(cell.boundary)
            if n < 3:
                raise ValueError(f"2-célula {cell.id} é um dígono; comprima o complexo antes")
            for position in range(n):
                angles[(cell.id, position)] = Fraction(n - 2, n)
        return AngledComplex(base=k, angles=angles)

    def cell_curvature(self, ac: AngledComplex, f: int) -> Fraction:
        """κ(f) = 2π - Σ deficiência dos cantos de f."""
        if not 0 <= f < len(ac.base.two_cells):
            raise ValueError(f"2-célula inexistente: {f}")
        cell = ac.base.two_cells[f]
        return 2 - sum((ac.deficiency((f, position)) for position in range(len(cell.boundary))), Fraction(0))

    def _corner_angles(self, ac: AngledComplex, edges: List[LinkEdge]) -> Fraction:
        return sum((ac.angle((edge.two_cell, edge.position)) for edge in edges), Fraction(0))

    def vertex_curvature(self, ac: AngledComplex, x: int) -> Fraction:
        """
        κ(y) = 2π - πχ(link(y)) - Σ ∠(e), conferido contra (2 - v)π + Σ deficiência(e).
        """
        link = self.complex_svc.link(ac.base, x)
        angle_sum = self._corner_angles(ac, link.edges)
        by_chi = 2 - link.euler_characteristic() - angle_sum
        by_deficiency = 2 - len(link.vertices) + sum(
            (ac.deficiency((edge.two_cell, edge.position)) for edge in link.edges), Fraction(0)
        )
        if by_chi != by_deficiency:
            raise AssertionError(f"Formas da curvatura divergem em x={x}: {by_chi} != {by_deficiency}")
        return by_chi

    @staticmethod
    def _section_graph(s: SectionSpec) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(s.vertices)
        for edge in s.edges:
            graph.add_edge(edge.u, edge.v, key=(edge.two_cell, edge.position))
        return graph

    def is_regular(self, s: SectionSpec) -> bool:
        """Não vazia, conexa e sem vértices de valência <= 1."""
        if not s.vertices:
            return False
        vertex_set = set(s.vertices)
        if any(edge.u not in vertex_set or edge.v not in vertex_set for edge in s.edges):
            return False
        graph = self._section_graph(s)
        return nx.is_connected(graph) and min(degree for _, degree in graph.degree()) >= 2

    def section_curvature(self, ac: AngledComplex, s: SectionSpec) -> Fraction:
        if not self.is_regular(s):
            raise ValueError(f"Seção irregular em x={s.x}")
        return 2 - (len(s.vertices) - len(s.edges)) - self._corner_angles(ac, list(s.edges))

    def full_link_section(self, k: TwoComplex, x: int) -> SectionSpec:
        link = self.complex_svc.link(k, x)
        return SectionSpec(x=x, vertices=tuple(link.vertices), edges=tuple(link.edges))

    def has_nonpositive_sectional(self, p: CoxeterPresentation) -> SectionalVerdict:
        """
        χ(H) <= 0 para todo subgrupo de Coxeter H com Υ_H conexo e que não é árvore.

        Os subconjuntos são percorridos por tamanho crescente; a primeira violação é a testemunha.
        """
        dimension_ok = self.coxeter_svc.has_dimension_at_most_2(p)
        if not dimension_ok:
            logger.warning("Apresentação com tripla finita: critério seccional fora da hipótese")
        graph = p.diagram().to_graph()
        for size in range(3, p.rank + 1):
            for subset in itertools.combinations(p.generators, size):
                induced = graph.subgraph(subset)
                if not nx.is_connected(induced) or nx.is_tree(induced):
                    continue
                chi = self.coxeter_svc.euler_characteristic(self.coxeter_svc.coxeter_subgroup(p, subset))
                if chi > 0:
                    return SectionalVerdict(False, witness=subset, witness_chi=chi,
                                            dimension_at_most_2=dimension_ok)
        return SectionalVerdict(True, dimension_at_most_2=dimension_ok)

    def brute_force_sectional_at(self, ac: AngledComplex, x: int) -> BruteForceSection:
        """
        Máximo de κ(s) sobre todos os subgrafos regulares do link de x.

        Args:
            ac: Complexo angulado
            x: 0-célula

        Returns:
            BruteForceSection; `argmax` é None quando não há seção regular
        """
        link = self.complex_svc.link(ac.base, x)
        if len(link.vertices) > BRUTE_FORCE_LINK_CAP:
            raise SizeCapExceeded(
                f"Link de x={x} com {len(link.vertices)} vértices; limite é {BRUTE_FORCE_LINK_CAP}"
            )
        result = BruteForceSection(x=x, sections_checked=0)
        for size in range(1, len(link.edges) + 1):
            for edges in itertools.combinations(link.edges, size):
                vertices = tuple(dict.fromkeys(v for edge in edges for v in (edge.u, edge.v)))
                section = SectionSpec(x=x, vertices=vertices, edges=edges)
                if not self.is_regular(section):
                    continue
                result.sections_checked += 1
                curvature = self.section_curvature(ac, section)
                if result.max_curvature is None or curvature > result.max_curvature:
                    result.max_curvature = curvature
                    result.argmax = section
        if result.argmax is None:
            logger.info(f"Link de x={x} não tem seções regulares")
        return result

    def negative_sectional_sufficient(self, p: CoxeterPresentation) -> bool:
        """Todos os expoentes finitos satisfazem m_ij > r(r-1) / (2(r-2))."""
        if p.rank < 3:
            raise ValueError(f"Critério exige r >= 3, recebido {p.rank}")
        threshold = Fraction(p.rank * (p.rank - 1), 2 * (p.rank - 2))
        return all(m > threshold for _, _, m in p.finite_pairs())

    def locally_quasiconvex_sufficient(self, p: CoxeterPresentation) -> QuasiconvexVerdict:
        m = p.uniform_exponent()
        if m is None:
            return QuasiconvexVerdict(applicable=False, reason="critério enunciado apenas para expoente uniforme")
        return QuasiconvexVerdict(applicable=True, holds=2 * m >= 3 * p.rank)

    def curvature_report(self, p: CoxeterPresentation, ac: AngledComplex) -> CurvatureReport:
        """
        Relatório agregado: κ por célula e vértice, κ do link completo e os vereditos.
        """
        try:
            k = ac.base
            report = CurvatureReport(
                cell_curvatures={cell.id: self.cell_curvature(ac, cell.id) for cell in k.two_cells},
                vertex_curvatures={x: self.vertex_curvature(ac, x) for x in range(k.zero_cells)},
                planar_nonpositive=self.coxeter_svc.has_dimension_at_most_2(p),
                sectional=self.has_nonpositive_sectional(p),
                negative_sufficient=self.negative_sectional_sufficient(p) if p.rank >= 3 else None,
                quasiconvex=self.locally_quasiconvex_sufficient(p),
            )
            for x in range(k.zero_cells):
                section = self.full_link_section(k, x)
                if self.is_regular(section):
                    report.section_curvatures.append((x, self.section_curvature(ac, section)))
            logger.info(f"Relatório de curvatura com {k.zero_cells} vértices")
            return report
        except Exception as e:
            logger.error(f"Erro ao calcular curvatura: {e}")
            raise
