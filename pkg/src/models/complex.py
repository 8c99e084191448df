"""
Modelo de 2-complexos combinatórios, grafos de link e quocientes por permutações.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import networkx as nx
from sympy.combinatorics import Permutation

# Extremidades de uma 1-célula.
TAIL = 0
HEAD = 1

# Um passo do bordo: (id da 1-célula, +1 se percorrida de tail para head, -1 caso contrário)
Step = Tuple[int, int]


@dataclass(frozen=True)
class OneCell:
    id: int
    tail: int
    head: int
    label: Optional[int] = None

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def endpoint(self, end: int) -> int:
        return self.tail if end == TAIL else self.head


@dataclass(frozen=True)
class TwoCell:
    """
    2-célula com bordo cíclico.

    `tag` identifica o relator de origem: ("square", i) para a_i^2 e
    ("pair", i, j) para (a_i a_j)^m_ij.
    """
    id: int
    boundary: Tuple[Step, ...]
    tag: Optional[tuple] = None

    def __len__(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class TwoComplex:
    """
    2-complexo combinatório com células indexadas por 0..n-1.
    """
    zero_cells: int
    one_cells: Tuple[OneCell, ...]
    two_cells: Tuple[TwoCell, ...] = ()

    def __post_init__(self):
        for index, edge in enumerate(self.one_cells):
            if edge.id != index:
                raise ValueError(f"1-célula fora de ordem: {edge.id} na posição {index}")
            for vertex in (edge.tail, edge.head):
                if not 0 <= vertex < self.zero_cells:
                    raise ValueError(f"1-célula {edge.id} com extremidade inválida {vertex}")
        for index, cell in enumerate(self.two_cells):
            if cell.id != index:
                raise ValueError(f"2-célula fora de ordem: {cell.id} na posição {index}")
            self._check_closed(cell)

    def _check_closed(self, cell: TwoCell) -> None:
        if not cell.boundary:
            raise ValueError(f"2-célula {cell.id} com bordo vazio")
        n = len(cell.boundary)
        for k in range(n):
            if self.step_end(cell.boundary[k]) != self.step_start(cell.boundary[(k + 1) % n]):
                raise ValueError(f"Bordo da 2-célula {cell.id} não é um caminho fechado (posição {k})")

    def step_start(self, step: Step) -> int:
        edge = self.one_cells[step[0]]
        return edge.tail if step[1] > 0 else edge.head

    def step_end(self, step: Step) -> int:
        edge = self.one_cells[step[0]]
        return edge.head if step[1] > 0 else edge.tail

    def corner_vertex(self, cell: TwoCell, position: int) -> int:
        """0-célula no início da posição `position` do bordo (o canto entre position-1 e position)."""
        return self.step_start(cell.boundary[position])

    def euler_characteristic(self) -> int:
        return self.zero_cells - len(self.one_cells) + len(self.two_cells)

    def cell_counts(self) -> Tuple[int, int, int]:
        return self.zero_cells, len(self.one_cells), len(self.two_cells)

    @cached_property
    def corner_index(self) -> Dict[int, List[Tuple[int, int]]]:
        """Cantos (2-célula, posição) agrupados pela 0-célula onde estão."""
        index = defaultdict(list)
        for cell in self.two_cells:
            for position in range(len(cell.boundary)):
                index[self.corner_vertex(cell, position)].append((cell.id, position))
        return dict(index)

    @cached_property
    def incidence_index(self) -> Dict[int, List[Tuple[int, int]]]:
        """Extremidades (1-célula, TAIL/HEAD) agrupadas pela 0-célula."""
        index = defaultdict(list)
        for edge in self.one_cells:
            index[edge.tail].append((edge.id, TAIL))
            index[edge.head].append((edge.id, HEAD))
        return dict(index)


@dataclass(frozen=True)
class LinkVertex:
    """Extremidade de uma 1-célula incidente em x."""
    one_cell: int
    end: int


@dataclass(frozen=True)
class LinkEdge:
    """Canto de uma 2-célula em x: liga a chegada da posição-1 à saída da posição."""
    two_cell: int
    position: int
    u: LinkVertex
    v: LinkVertex


@dataclass
class LinkGraph:
    x: int
    vertices: List[LinkVertex] = field(default_factory=list)
    edges: List[LinkEdge] = field(default_factory=list)
    wall_of: Dict[LinkVertex, int] = field(default_factory=dict)

    def to_graph(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.u, edge.v, key=(edge.two_cell, edge.position))
        return graph

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges)


@dataclass(frozen=True)
class PermutationQuotient:
    """
    Quociente finito ψ dado por uma permutação de {0..degree-1} por gerador.

    O formato JSON usa listas de imagens 1-based.
    """
    degree: int
    generator_images: Tuple[Permutation, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"Grau inválido: {self.degree}")
        for index, perm in enumerate(self.generator_images, start=1):
            if perm.size != self.degree:
                raise ValueError(
                    f"Imagem do gerador {index} atua em {perm.size} pontos, esperado {self.degree}"
                )

    @classmethod
    def from_images(cls, degree: int, images: List[List[int]]) -> "PermutationQuotient":
        perms = []
        for index, image in enumerate(images, start=1):
            if sorted(image) != list(range(1, degree + 1)):
                raise ValueError(f"Imagem do gerador {index} não é uma permutação de 1..{degree}")
            perms.append(Permutation([value - 1 for value in image]))
        return cls(degree=degree, generator_images=tuple(perms))

    def images_one_based(self) -> List[List[int]]:
        return [[value + 1 for value in perm.array_form] for perm in self.generator_images]

    def image(self, generator: int) -> Permutation:
        return self.generator_images[generator - 1]


@dataclass(frozen=True)
class TorsionCheck:
    torsion_free: bool
    diagnostic: str = ""
