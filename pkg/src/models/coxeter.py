"""
Modelo de apresentações de Coxeter e seus diagramas.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

import networkx as nx

# Marcador textual de expoente infinito no formato JSON.
INFINITY = "inf"

Pair = Tuple[int, int]


def normalize_pair(i: int, j: int) -> Pair:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class CoxeterPresentation:
    """
    Apresentação <a_1..a_r | a_i^2, (a_i a_j)^m_ij>.

    Apenas os pares com m_ij finito são guardados em `exponents`;
    um par ausente significa m_ij = infinito.
    """
    rank: int
    exponents: Dict[Pair, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"Posto inválido: {self.rank}")
        normalized = {}
        for (i, j), m in self.exponents.items():
            if i == j or not (1 <= i <= self.rank and 1 <= j <= self.rank):
                raise ValueError(f"Par de geradores inválido: ({i}, {j})")
            if not isinstance(m, int) or m < 2:
                raise ValueError(f"Expoente inválido para ({i}, {j}): {m}")
            pair = normalize_pair(i, j)
            if pair in normalized and normalized[pair] != m:
                raise ValueError(f"Matriz de expoentes não simétrica em {pair}")
            normalized[pair] = m
        object.__setattr__(self, "exponents", dict(sorted(normalized.items())))

    @property
    def generators(self) -> range:
        return range(1, self.rank + 1)

    def exponent(self, i: int, j: int) -> Optional[int]:
        """Retorna m_ij, ou None quando m_ij = infinito."""
        return self.exponents.get(normalize_pair(i, j))

    def finite_pairs(self) -> Iterator[Tuple[int, int, int]]:
        for (i, j), m in self.exponents.items():
            yield i, j, m

    def uniform_exponent(self) -> Optional[int]:
        """
        Retorna m se todos os pares tiverem o mesmo expoente finito m.

        Para posto 1 não há pares e o resultado é None.
        """
        values = set(self.exponents.values())
        pair_count = self.rank * (self.rank - 1) // 2
        if len(values) == 1 and len(self.exponents) == pair_count:
            return values.pop()
        return None

    def diagram(self) -> "CoxeterDiagram":
        return CoxeterDiagram(
            vertices=tuple(self.generators),
            edges=dict(self.exponents),
        )


@dataclass(frozen=True)
class CoxeterDiagram:
    """Grafo rotulado Υ_G: aresta {i,j} com rótulo m_ij sempre que m_ij < ∞."""
    vertices: Tuple[int, ...]
    edges: Dict[Pair, int]

    def to_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for (i, j), m in self.edges.items():
            graph.add_edge(i, j, label=m)
        return graph
