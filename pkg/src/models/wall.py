"""
Modelo de paredes (walls) e do relatório de patologias.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx


@dataclass(frozen=True)
class Arc:
    """Arco de uma parede dentro de uma 2-célula, ligando posições opostas do bordo."""
    two_cell: int
    position_a: int
    position_b: int


@dataclass(frozen=True)
class Wall:
    id: int
    dual_one_cells: Tuple[int, ...]
    arcs: Tuple[Arc, ...]
    # 1-célula em cada extremidade de cada arco, na ordem de `arcs`
    arc_ends: Tuple[Tuple[int, int], ...] = ()

    def graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.dual_one_cells)
        for arc, (a, b) in zip(self.arcs, self.arc_ends):
            graph.add_edge(a, b, key=(arc.two_cell, arc.position_a))
        return graph


@dataclass(frozen=True)
class WallSet:
    walls: Tuple[Wall, ...]
    one_cell_to_wall: Dict[int, int]

    def __len__(self) -> int:
        return len(self.walls)

    def wall_of(self, one_cell: int) -> int:
        return self.one_cell_to_wall[one_cell]


@dataclass
class EmbeddingVerdict:
    wall_id: int
    embedded: bool
    # ("cell", id) quando dois arcos estão na mesma 2-célula; ("one_cell", id) quando
    # a parede atravessa a mesma 1-célula duas vezes dentro de uma 2-célula
    witness: Optional[Tuple[str, int]] = None


@dataclass
class SidednessVerdict:
    wall_id: int
    two_sided: bool
    # orientação de cada 1-célula dual (+1 = tail->head) quando a parede é bilateral
    orientation: Optional[Dict[int, int]] = None
    # arcos de um ciclo contraditório quando a parede é unilateral
    contradiction: List[Arc] = field(default_factory=list)


@dataclass
class Osculation:
    wall_id: int
    x: int
    link_vertices: List[Tuple[int, int]] = field(default_factory=list)
    link_edges: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def adjacency_count(self) -> int:
        return len(self.link_vertices) + len(self.link_edges)


@dataclass
class WallPathology:
    wall_id: int
    embedding: EmbeddingVerdict
    sidedness: SidednessVerdict
    osculations: List[Osculation] = field(default_factory=list)

    @property
    def good(self) -> bool:
        return self.embedding.embedded and self.sidedness.two_sided and not self.osculations


@dataclass
class PathologyReport:
    walls: WallSet
    per_wall: List[WallPathology]

    @property
    def good_walls(self) -> bool:
        return all(item.good for item in self.per_wall)

    def failing_walls(self) -> List[int]:
        return [item.wall_id for item in self.per_wall if not item.good]
