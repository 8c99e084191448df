"""
Serviço de teoria de Morse combinatória: orientações de paredes, links
ascendentes/descendentes, subcomplexo legal, busca aleatória e certificado.
"""
import logging
import random
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.models.complex import TAIL, LinkEdge, LinkVertex, PermutationQuotient, TwoCell, TwoComplex
from src.models.coxeter import CoxeterPresentation
from src.models.errors import HypothesisFailure
from src.models.morse import (
    FULL,
    KERNEL_ONLY,
    PARTIAL,
    AscDescReport,
    Certificate,
    DirectedSkeleton,
    SearchResult,
    SearchStatistics,
    VertexLinks,
    WallOrientation,
)
from src.models.wall import PathologyReport, WallSet
from src.services.complex_service import ComplexService
from src.services.coxeter_service import CoxeterService
from src.services.wall_service import WallService

logger = logging.getLogger(__name__)

ReferenceOrientation = Dict[int, Dict[int, int]]


class MorseService:
    """
    Serviço que transforma orientações de paredes em funções de Morse combinatórias.
    """
    def __init__(self, complex_svc: ComplexService, wall_svc: WallService, coxeter_svc: CoxeterService):
        self.complex_svc = complex_svc
        self.wall_svc = wall_svc
        self.coxeter_svc = coxeter_svc

    def reference_orientation(self, k: TwoComplex, ws: WallSet) -> ReferenceOrientation:
        """
        Orientação consistente de referência de cada parede (a escolhida pelo sinal +1).
        """
        reference = {}
        for verdict in self.wall_svc.two_sidedness(k, ws):
            if not verdict.two_sided:
                raise HypothesisFailure(f"Parede {verdict.wall_id} é unilateral; não há orientação")
            reference[verdict.wall_id] = verdict.orientation
        return reference

    def induce_directions(
        self,
        k: TwoComplex,
        ws: WallSet,
        o: WallOrientation,
        reference: Optional[ReferenceOrientation] = None,
    ) -> DirectedSkeleton:
        """
        Direção de cada 1-célula induzida pela orientação da sua parede dual.

        Args:
            k: Complexo
            ws: Paredes do complexo
            o: Sinal por parede
            reference: Orientações de referência já calculadas (opcional)

        Returns:
            Esqueleto direcionado; todo bordo de 2-célula tem soma de sinais zero
        """
        reference = reference if reference is not None else self.reference_orientation(k, ws)
        directions = {}
        arcs = {}
        for wall in ws.walls:
            sign = o.signs[wall.id]
            for one_cell in wall.dual_one_cells:
                direction = sign * reference[wall.id][one_cell]
                edge = k.one_cells[one_cell]
                directions[one_cell] = direction
                arcs[one_cell] = (edge.tail, edge.head) if direction > 0 else (edge.head, edge.tail)
        skeleton = DirectedSkeleton(directions=directions, arcs=arcs)
        for cell in k.two_cells:
            if sum(self.traversal_signs(skeleton, cell)) != 0:
                raise HypothesisFailure(f"Bordo da 2-célula {cell.id} não é nulo-homotópico em S^1")
        return skeleton

    @staticmethod
    def traversal_signs(ds: DirectedSkeleton, cell: TwoCell) -> List[int]:
        """+1 onde o bordo percorre a 1-célula no sentido positivo da orientação."""
        return [ds.directions[one_cell] * direction for one_cell, direction in cell.boundary]

    @staticmethod
    def _points_away(ds: DirectedSkeleton, vertex: LinkVertex) -> bool:
        direction = ds.directions[vertex.one_cell]
        return direction > 0 if vertex.end == TAIL else direction < 0

    def _corner_kind(self, ds: DirectedSkeleton, cell: TwoCell, position: int) -> int:
        """
        +1 se o canto é ascendente (todas as paredes da célula apontam para longe do
        canto), -1 se descendente, 0 caso contrário.
        """
        signs = self.traversal_signs(ds, cell)
        n = len(signs)
        half = n // 2
        rotated = signs[position:] + signs[:position]
        if all(s > 0 for s in rotated[:half]) and all(s < 0 for s in rotated[half:]):
            return 1
        if all(s < 0 for s in rotated[:half]) and all(s > 0 for s in rotated[half:]):
            return -1
        return 0

    @staticmethod
    def _connected(vertices: List[LinkVertex], edges: List[LinkEdge]) -> bool:
        if not vertices:
            return False
        graph = nx.MultiGraph()
        graph.add_nodes_from(vertices)
        graph.add_edges_from((edge.u, edge.v) for edge in edges)
        return nx.is_connected(graph)

    def vertex_links(self, k: TwoComplex, ds: DirectedSkeleton, x: int) -> VertexLinks:
        link = self.complex_svc.link(k, x)
        result = VertexLinks(x=x)
        for vertex in link.vertices:
            if self._points_away(ds, vertex):
                result.ascending_vertices.append(vertex)
            else:
                result.descending_vertices.append(vertex)
        for edge in link.edges:
            kind = self._corner_kind(ds, k.two_cells[edge.two_cell], edge.position)
            if kind > 0:
                result.ascending_edges.append(edge)
            elif kind < 0:
                result.descending_edges.append(edge)
        result.ascending_nonempty = bool(result.ascending_vertices)
        result.descending_nonempty = bool(result.descending_vertices)
        result.ascending_connected = self._connected(result.ascending_vertices, result.ascending_edges)
        result.descending_connected = self._connected(result.descending_vertices, result.descending_edges)
        return result

    def asc_desc_links(self, k: TwoComplex, ws: WallSet, o: WallOrientation) -> AscDescReport:
        """
        Links ascendente e descendente de cada 0-célula, com não vacuidade e conexidade.
        """
        ds = self.induce_directions(k, ws, o)
        return self.links_for_skeleton(k, ds)

    def links_for_skeleton(self, k: TwoComplex, ds: DirectedSkeleton) -> AscDescReport:
        return AscDescReport(per_vertex=[self.vertex_links(k, ds, x) for x in range(k.zero_cells)])

    def is_lawful(self, ds: DirectedSkeleton, cell: TwoCell) -> bool:
        """O bordo se escreve como αβ^-1 com α, β positivos: exatamente duas trocas de sinal."""
        signs = self.traversal_signs(ds, cell)
        changes = sum(1 for index in range(len(signs)) if signs[index] != signs[index - 1])
        return changes == 2

    def lawful_cells(self, k: TwoComplex, ds: DirectedSkeleton) -> List[int]:
        return [cell.id for cell in k.two_cells if self.is_lawful(ds, cell)]

    def lawful_subcomplex(self, k: TwoComplex, ds: DirectedSkeleton) -> TwoComplex:
        """
        Subcomplexo legal Y: todas as 0- e 1-células e as 2-células legais (renumeradas).
        """
        kept = [k.two_cells[cell_id] for cell_id in self.lawful_cells(k, ds)]
        two_cells = tuple(
            TwoCell(id=index, boundary=cell.boundary, tag=cell.tag)
            for index, cell in enumerate(kept)
        )
        return TwoComplex(zero_cells=k.zero_cells, one_cells=k.one_cells, two_cells=two_cells)

    def has_positive_closed_path(self, ds: DirectedSkeleton) -> bool:
        """Existe ciclo direcionado no 1-esqueleto orientado."""
        return not nx.is_directed_acyclic_graph(ds.to_graph())

    def random_orientation_search(
        self,
        k: TwoComplex,
        report: PathologyReport,
        seed: int,
        max_attempts: int,
    ) -> SearchResult:
        """
        Sorteia orientações uniformes até que todo link ascendente e descendente seja
        não vazio e conexo.

        Args:
            k: Complexo comprimido
            report: Relatório de patologias do complexo (deve ter paredes boas)
            seed: Semente do gerador
            max_attempts: Número máximo de tentativas

        Returns:
            SearchResult com a orientação encontrada ou a melhor tentativa
        """
        statistics = SearchStatistics()
        if not report.good_walls:
            reason = f"paredes com patologias: {report.failing_walls()}"
            logger.warning(f"Busca recusada: {reason}")
            return SearchResult(found=False, orientation=None, statistics=statistics, refused=True, reason=reason)

        ws = report.walls
        reference = self.reference_orientation(k, ws)
        master = random.Random(seed)
        best: Optional[Tuple[int, WallOrientation, List[int]]] = None
        for attempt in range(max_attempts):
            rng = random.Random(master.getrandbits(64))
            orientation = self._random_orientation(ws, rng)
            ds = self.induce_directions(k, ws, orientation, reference)
            links = self.links_for_skeleton(k, ds)
            statistics = statistics.merge(self._attempt_statistics(links))
            failing = links.failing_vertices()
            logger.debug(f"Tentativa {attempt + 1}: {len(failing)} vértices falham")
            if not failing:
                logger.info(f"Orientação encontrada na tentativa {attempt + 1}")
                return SearchResult(found=True, orientation=orientation, statistics=statistics,
                                    best_orientation=orientation)
            if best is None or len(failing) < best[0]:
                best = (len(failing), orientation, failing)

        logger.warning(f"Busca esgotada após {max_attempts} tentativas")
        return SearchResult(
            found=False,
            orientation=None,
            statistics=statistics,
            best_orientation=best[1] if best else None,
            best_failing_vertices=best[2] if best else [],
            reason="tentativas esgotadas",
        )

    @staticmethod
    def _random_orientation(ws: WallSet, rng: random.Random) -> WallOrientation:
        return WallOrientation({wall.id: 1 if rng.getrandbits(1) else -1 for wall in ws.walls})

    def orientation_statistics(self, k: TwoComplex, ws: WallSet, seed: int, samples: int) -> SearchStatistics:
        """
        Estatísticas de links de `samples` orientações uniformes, sem parar no primeiro sucesso.

        Exige apenas paredes bilaterais; serve para comparar as frequências com o modelo probabilístico.
        """
        if samples < 1:
            raise ValueError(f"samples deve ser >= 1, recebido {samples}")
        reference = self.reference_orientation(k, ws)
        master = random.Random(seed)
        statistics = SearchStatistics()
        for _ in range(samples):
            rng = random.Random(master.getrandbits(64))
            ds = self.induce_directions(k, ws, self._random_orientation(ws, rng), reference)
            statistics = statistics.merge(self._attempt_statistics(self.links_for_skeleton(k, ds)))
        logger.info(f"{samples} orientações amostradas: {statistics.ascending_empty} links ascendentes vazios")
        return statistics

    @staticmethod
    def _attempt_statistics(links: AscDescReport) -> SearchStatistics:
        statistics = SearchStatistics(attempts=1)
        for item in links.per_vertex:
            if not item.ascending_nonempty:
                statistics.ascending_empty += 1
            elif not item.ascending_connected:
                statistics.ascending_disconnected += 1
            if not item.descending_nonempty:
                statistics.descending_empty += 1
            elif not item.descending_connected:
                statistics.descending_disconnected += 1
        return statistics

    @staticmethod
    def certificate_status(chi: Fraction, missing: List[str]) -> str:
        """FULL com a cadeia completa e χ > 0, KERNEL_ONLY com χ <= 0, PARTIAL se falta algo."""
        if missing:
            return PARTIAL
        return FULL if chi > 0 else KERNEL_ONLY

    def incoherence_certificate(
        self,
        p: CoxeterPresentation,
        q: PermutationQuotient,
        k: TwoComplex,
        report: PathologyReport,
        search: SearchResult,
    ) -> Certificate:
        """
        Monta o certificado estruturado da cadeia do teorema principal.

        As implicações de teoria de grupos (Bestvina-Brady, Bieri) são citadas,
        não reprovadas.
        """
        chi = self.coxeter_svc.euler_characteristic(p)
        dimension_ok = self.coxeter_svc.has_dimension_at_most_2(p)
        missing = []
        conclusions = []
        vertex_verdicts: Dict[int, bool] = {}
        failing: List[int] = list(search.best_failing_vertices)
        closed_path = False
        lawful = 0

        torsion = self.complex_svc.check_torsion_free_kernel(p, q)
        if not torsion.torsion_free:
            missing.append(f"ker ψ tem torção: {torsion.diagnostic}")
        mismatches = self.complex_svc.compressed_cover_mismatches(k, p, q)
        if mismatches:
            missing.append(f"complexo não é a compressão do recobrimento de ψ: {'; '.join(mismatches)}")
        elif k.euler_characteristic() != chi * k.zero_cells:
            missing.append(f"χ(K) = {k.euler_characteristic()} difere de d·χ(G) = {chi * k.zero_cells}")
        if not dimension_ok:
            missing.append("dimensão <= 2 (asfericidade) não vale")
        if not report.good_walls:
            missing.append("paredes com patologias")
        if search.refused:
            missing.append(f"busca recusada: {search.reason}")
        elif not search.found:
            missing.append("nenhuma orientação satisfaz as condições de link")

        orientation = search.orientation or search.best_orientation
        if orientation is not None and report.good_walls:
            ds = self.induce_directions(k, report.walls, orientation)
            links = self.links_for_skeleton(k, ds)
            vertex_verdicts = {item.x: item.passes for item in links.per_vertex}
            failing = links.failing_vertices()
            closed_path = self.has_positive_closed_path(ds)
            lawful = len(self.lawful_cells(k, ds))
            if search.found and not closed_path:
                missing.append("não há caminho fechado positivo")

        status = self.certificate_status(chi, missing)
        if status == PARTIAL:
            logger.warning(f"Certificado parcial: {missing}")
        else:
            conclusions.append("ker(G' -> Z) é finitamente gerado (critério de links de Bestvina-Brady)")
            if status == FULL:
                conclusions.append(f"χ(G) = {chi} > 0, logo o núcleo não é livre (Bieri) e G é incoerente")
            else:
                conclusions.append("χ(G) <= 0: núcleo f.g. apenas; incoerência não concluída")

        return Certificate(
            status=status,
            degree=k.zero_cells,
            chi=str(chi),
            dimension_at_most_2=dimension_ok,
            good_walls=report.good_walls,
            orientation=dict(search.orientation.signs) if search.found else None,
            vertex_verdicts=vertex_verdicts,
            failing_vertices=failing,
            positive_closed_path=closed_path,
            lawful_cells=lawful,
            conclusions=conclusions,
            missing=missing,
        )
