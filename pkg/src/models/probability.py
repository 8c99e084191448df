"""
Modelo do link aleatório Γ (grafo completo em r vértices) e resultados de amostragem.
"""
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Dict, Tuple


@dataclass(frozen=True)
class LinkModel:
    r: int
    m: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"r inválido: {self.r}")
        if self.m < 3:
            raise ValueError(f"O modelo exige m >= 3, recebido {self.m}")

    @property
    def edge_count(self) -> int:
        return self.r * (self.r - 1) // 2

    @property
    def bit_count(self) -> int:
        return self.r + (self.m - 2) * self.edge_count


@dataclass(frozen=True)
class WallBits:
    """Um bit por parede: r paredes de vértice e m-2 paredes internas por aresta."""
    vertex_bits: Tuple[int, ...]
    edge_bits: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_pattern(cls, model: LinkModel, pattern: int) -> "WallBits":
        vertex_bits = tuple((pattern >> i) & 1 for i in range(model.r))
        interior = model.m - 2
        edge_bits = []
        offset = model.r
        for _ in range(model.edge_count):
            edge_bits.append(tuple((pattern >> (offset + t)) & 1 for t in range(interior)))
            offset += interior
        return cls(vertex_bits=vertex_bits, edge_bits=tuple(edge_bits))


@dataclass(frozen=True)
class LinkSample:
    ascending_nonempty: bool
    ascending_connected: bool
    descending_nonempty: bool
    descending_connected: bool
    condition_one: bool
    condition_two: bool

    @property
    def ascending_fails(self) -> bool:
        return not (self.ascending_nonempty and self.ascending_connected)

    @property
    def descending_fails(self) -> bool:
        return not (self.descending_nonempty and self.descending_connected)


@dataclass(frozen=True)
class ExactFailure:
    model: LinkModel
    ascending: Fraction
    descending: Fraction
    either: Fraction
    no_ascending_vertex: Fraction


@dataclass(frozen=True)
class MonteCarloResult:
    trials: int
    ascending_failures: int = 0
    descending_failures: int = 0
    either_failures: int = 0
    no_ascending_vertex: int = 0
    no_descending_vertex: int = 0

    def merge(self, other: "MonteCarloResult") -> "MonteCarloResult":
        return MonteCarloResult(
            trials=self.trials + other.trials,
            ascending_failures=self.ascending_failures + other.ascending_failures,
            descending_failures=self.descending_failures + other.descending_failures,
            either_failures=self.either_failures + other.either_failures,
            no_ascending_vertex=self.no_ascending_vertex + other.no_ascending_vertex,
            no_descending_vertex=self.no_descending_vertex + other.no_descending_vertex,
        )

    def estimate(self, count: int) -> float:
        return count / self.trials

    def standard_error(self, count: int) -> float:
        p = self.estimate(count)
        return math.sqrt(p * (1 - p) / self.trials)


@dataclass(frozen=True)
class NonuniformThreshold:
    """
    Posto limiar por expoente 3..M e a cota de Ramsey sobre eles.

    A cota vai para o JSON via Decimal, que não tem o limite de dígitos de str(int).
    """
    max_exponent: int
    q_size: int
    ranks: Dict[int, int]
    bound: int

    def to_dict(self) -> dict:
        return {
            "max_exponent": self.max_exponent,
            "q_size": self.q_size,
            "ranks": {str(m): r for m, r in self.ranks.items()},
            "bound": str(Decimal(self.bound)),
            "bound_bits": self.bound.bit_length(),
        }
