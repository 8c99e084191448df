"""
Serviço para paredes: extração pela relação de paralelismo e teste das três
patologias (mergulho, bilateralidade, auto-osculação).
"""
import logging
from collections import defaultdict, deque
from typing import Dict, List, Optional, Tuple

from networkx.utils import UnionFind

from src.models.complex import LinkGraph, TwoComplex
from src.models.wall import (
    Arc,
    EmbeddingVerdict,
    Osculation,
    PathologyReport,
    SidednessVerdict,
    Wall,
    WallPathology,
    WallSet,
)
from src.services.complex_service import ComplexService

logger = logging.getLogger(__name__)


class WallService:
    """
    Serviço para análise de paredes de um 2-complexo com 2-células de bordo par.
    """
    def __init__(self, complex_svc: ComplexService):
        """
        Inicializa o serviço de paredes.

        Args:
            complex_svc: Serviço de complexos (usado para os links)
        """
        self.complex_svc = complex_svc

    def extract_walls(self, k: TwoComplex) -> WallSet:
        """
        Classes de equivalência de 1-células geradas por "opostas numa 2-célula".

        Args:
            k: Complexo com todas as 2-células de bordo par

        Returns:
            WallSet com paredes numeradas pela menor 1-célula dual
        """
        uf = UnionFind(range(len(k.one_cells)))
        arcs: List[Tuple[Arc, int, int]] = []
        for cell in k.two_cells:
            n = len(cell.boundary)
            if n % 2:
                raise ValueError(f"2-célula {cell.id} tem bordo de comprimento ímpar ({n})")
            half = n // 2
            for position in range(half):
                a = cell.boundary[position][0]
                b = cell.boundary[position + half][0]
                uf.union(a, b)
                arcs.append((Arc(cell.id, position, position + half), a, b))

        classes = sorted(sorted(group) for group in uf.to_sets())
        one_cell_to_wall = {}
        for wall_id, group in enumerate(classes):
            for one_cell in group:
                one_cell_to_wall[one_cell] = wall_id

        wall_arcs: Dict[int, List[Tuple[Arc, int, int]]] = defaultdict(list)
        for arc, a, b in arcs:
            wall_arcs[one_cell_to_wall[a]].append((arc, a, b))
        walls = tuple(
            Wall(
                id=wall_id,
                dual_one_cells=tuple(group),
                arcs=tuple(arc for arc, _, _ in wall_arcs[wall_id]),
                arc_ends=tuple((a, b) for _, a, b in wall_arcs[wall_id]),
            )
            for wall_id, group in enumerate(classes)
        )
        logger.info(f"{len(walls)} paredes extraídas de {len(k.one_cells)} 1-células")
        return WallSet(walls=walls, one_cell_to_wall=one_cell_to_wall)

    def embeddedness(self, k: TwoComplex, ws: WallSet) -> List[EmbeddingVerdict]:
        """
        Uma parede falha quando (a) dois de seus arcos estão na mesma 2-célula ou
        (b) atravessa a mesma 1-célula em duas posições de uma 2-célula.
        """
        verdicts = []
        for wall in ws.walls:
            verdict = EmbeddingVerdict(wall_id=wall.id, embedded=True)
            seen_cells = set()
            for arc, (a, b) in zip(wall.arcs, wall.arc_ends):
                if arc.two_cell in seen_cells:
                    verdict = EmbeddingVerdict(wall.id, False, ("cell", arc.two_cell))
                    break
                seen_cells.add(arc.two_cell)
                if a == b:
                    verdict = EmbeddingVerdict(wall.id, False, ("one_cell", a))
                    break
            verdicts.append(verdict)
        return verdicts

    def two_sidedness(self, k: TwoComplex, ws: WallSet) -> List[SidednessVerdict]:
        """
        Resolve o sistema "1-células paralelas têm orientações opostas em ∂C".

        Cada arco impõe o(a)·o(b) = -d_a·d_b, onde d é o sentido de percurso no bordo.
        A parede é bilateral sse o sistema for consistente.
        """
        return [self._orient_wall(k, wall) for wall in ws.walls]

    def _orient_wall(self, k: TwoComplex, wall: Wall) -> SidednessVerdict:
        constraints: Dict[int, List[Tuple[int, int, Arc]]] = defaultdict(list)
        for arc, (a, b) in zip(wall.arcs, wall.arc_ends):
            cell = k.two_cells[arc.two_cell]
            relation = -cell.boundary[arc.position_a][1] * cell.boundary[arc.position_b][1]
            constraints[a].append((b, relation, arc))
            if a != b:
                constraints[b].append((a, relation, arc))

        orientation: Dict[int, int] = {}
        parent: Dict[int, Optional[Tuple[int, Arc]]] = {}
        for root in wall.dual_one_cells:
            if root in orientation:
                continue
            orientation[root] = 1
            parent[root] = None
            queue = deque([root])
            while queue:
                current = queue.popleft()
                for neighbour, relation, arc in constraints[current]:
                    expected = orientation[current] * relation
                    if neighbour not in orientation:
                        orientation[neighbour] = expected
                        parent[neighbour] = (current, arc)
                        queue.append(neighbour)
                    elif orientation[neighbour] != expected:
                        cycle = self._tree_path(parent, current) + self._tree_path(parent, neighbour)
                        return SidednessVerdict(
                            wall_id=wall.id,
                            two_sided=False,
                            contradiction=[arc] + cycle,
                        )
        return SidednessVerdict(wall_id=wall.id, two_sided=True, orientation=orientation)

    @staticmethod
    def _tree_path(parent: Dict[int, Optional[Tuple[int, Arc]]], node: int) -> List[Arc]:
        path = []
        while parent[node] is not None:
            node, arc = parent[node]
            path.append(arc)
        return path

    def adjacencies(self, k: TwoComplex, ws: WallSet, x: int) -> Dict[int, Osculation]:
        """
        Adjacências de cada parede a x: em vértices e em arestas do link(x).
        """
        found: Dict[int, Osculation] = {}
        link = self.complex_svc.link(k, x)
        for vertex in link.vertices:
            wall_id = ws.wall_of(vertex.one_cell)
            found.setdefault(wall_id, Osculation(wall_id, x)).link_vertices.append(
                (vertex.one_cell, vertex.end)
            )
        for edge in link.edges:
            endpoint_walls = {ws.wall_of(edge.u.one_cell), ws.wall_of(edge.v.one_cell)}
            cell = k.two_cells[edge.two_cell]
            crossing = {ws.wall_of(one_cell) for one_cell, _ in cell.boundary}
            for wall_id in sorted(crossing - endpoint_walls):
                found.setdefault(wall_id, Osculation(wall_id, x)).link_edges.append(
                    (edge.two_cell, edge.position)
                )
        return found

    def self_osculations(self, k: TwoComplex, ws: WallSet) -> Dict[int, List[Osculation]]:
        """
        Pontos onde uma parede é adjacente a uma 0-célula em mais de um elemento do link.
        """
        result: Dict[int, List[Osculation]] = {wall.id: [] for wall in ws.walls}
        for x in range(k.zero_cells):
            for wall_id, adjacency in sorted(self.adjacencies(k, ws, x).items()):
                if adjacency.adjacency_count >= 2:
                    result[wall_id].append(adjacency)
        return result

    def link_with_walls(self, k: TwoComplex, ws: WallSet, x: int) -> LinkGraph:
        link = self.complex_svc.link(k, x)
        link.wall_of = {vertex: ws.wall_of(vertex.one_cell) for vertex in link.vertices}
        return link

    def pathology_report(self, k: TwoComplex) -> PathologyReport:
        """
        Executa as três verificações; o veredito geral é "paredes boas" sse toda
        parede passa em todas.

        Args:
            k: Complexo (tipicamente a compressão de um recobrimento)

        Returns:
            Relatório por parede com testemunhas das falhas
        """
        try:
            ws = self.extract_walls(k)
            embedding = self.embeddedness(k, ws)
            sidedness = self.two_sidedness(k, ws)
            osculations = self.self_osculations(k, ws)
        except Exception as e:
            logger.error(f"Erro ao analisar paredes: {e}")
            raise
        per_wall = [
            WallPathology(
                wall_id=wall.id,
                embedding=embedding[wall.id],
                sidedness=sidedness[wall.id],
                osculations=osculations[wall.id],
            )
            for wall in ws.walls
        ]
        report = PathologyReport(walls=ws, per_wall=per_wall)
        if report.good_walls:
            logger.info(f"Todas as {len(ws)} paredes são bilaterais, mergulhadas e sem auto-osculação")
        else:
            logger.warning(f"Paredes com patologias: {report.failing_walls()}")
        return report
