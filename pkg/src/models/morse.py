"""
Modelo de orientações de paredes, esqueletos direcionados e certificados.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.models.complex import LinkEdge, LinkVertex


@dataclass(frozen=True)
class WallOrientation:
    """Sinal ±1 por parede; +1 escolhe a orientação de referência da parede."""
    signs: Dict[int, int]

    def flipped(self) -> "WallOrientation":
        return WallOrientation({wall: -sign for wall, sign in self.signs.items()})


@dataclass(frozen=True)
class DirectedSkeleton:
    """
    Direção de cada 1-célula (+1 = tail->head) induzida pela orientação das paredes.

    `arcs` guarda o par (origem, destino) já direcionado.
    """
    directions: Dict[int, int]
    arcs: Dict[int, Tuple[int, int]]

    def to_graph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        for one_cell, (source, target) in sorted(self.arcs.items()):
            graph.add_edge(source, target, key=one_cell)
        return graph


@dataclass
class VertexLinks:
    x: int
    ascending_vertices: List[LinkVertex] = field(default_factory=list)
    ascending_edges: List[LinkEdge] = field(default_factory=list)
    descending_vertices: List[LinkVertex] = field(default_factory=list)
    descending_edges: List[LinkEdge] = field(default_factory=list)
    ascending_nonempty: bool = False
    ascending_connected: bool = False
    descending_nonempty: bool = False
    descending_connected: bool = False

    @property
    def passes(self) -> bool:
        return (
            self.ascending_nonempty and self.ascending_connected
            and self.descending_nonempty and self.descending_connected
        )


@dataclass
class AscDescReport:
    per_vertex: List[VertexLinks]

    @property
    def passes(self) -> bool:
        return all(item.passes for item in self.per_vertex)

    def failing_vertices(self) -> List[int]:
        return [item.x for item in self.per_vertex if not item.passes]


@dataclass
class SearchStatistics:
    attempts: int = 0
    ascending_empty: int = 0
    ascending_disconnected: int = 0
    descending_empty: int = 0
    descending_disconnected: int = 0

    def merge(self, other: "SearchStatistics") -> "SearchStatistics":
        return SearchStatistics(
            attempts=self.attempts + other.attempts,
            ascending_empty=self.ascending_empty + other.ascending_empty,
            ascending_disconnected=self.ascending_disconnected + other.ascending_disconnected,
            descending_empty=self.descending_empty + other.descending_empty,
            descending_disconnected=self.descending_disconnected + other.descending_disconnected,
        )


@dataclass
class SearchResult:
    found: bool
    orientation: Optional[WallOrientation]
    statistics: SearchStatistics
    best_orientation: Optional[WallOrientation] = None
    best_failing_vertices: List[int] = field(default_factory=list)
    refused: bool = False
    reason: str = ""


# Estados possíveis de um certificado
FULL = "full"
KERNEL_ONLY = "kernel-only"
PARTIAL = "partial"


@dataclass
class Certificate:
    status: str
    degree: int
    chi: str
    dimension_at_most_2: bool
    good_walls: bool
    orientation: Optional[Dict[int, int]]
    vertex_verdicts: Dict[int, bool]
    failing_vertices: List[int]
    positive_closed_path: bool
    lawful_cells: int
    conclusions: List[str] = field(default_factory=list)
    missing: List[str] = field(default_factory=list)
