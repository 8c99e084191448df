"""
Modelo de partições S -> {1,2,3,4} e famílias separadoras.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from src.models.complex import PermutationQuotient

PARTS = (1, 2, 3, 4)

Quadruple = Tuple[int, int, int, int]


@dataclass(frozen=True)
class Partition:
    """values[i-1] é a parte do elemento i."""
    values: Tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("Partição vazia")
        for value in self.values:
            if value not in PARTS:
                raise ValueError(f"Valor de partição fora de 1..4: {value}")

    @property
    def r(self) -> int:
        return len(self.values)

    def __getitem__(self, element: int) -> int:
        return self.values[element - 1]


@dataclass(frozen=True)
class PartitionFamily:
    r: int
    partitions: Tuple[Partition, ...] = ()

    def __post_init__(self):
        for partition in self.partitions:
            if partition.r != self.r:
                raise ValueError(f"Partição sobre {partition.r} elementos numa família com r={self.r}")

    def __len__(self) -> int:
        return len(self.partitions)


@dataclass
class FamilyResult:
    found: bool
    family: Optional[PartitionFamily]
    attempts: int
    best_unseparated: int
    best_family: Optional[PartitionFamily] = None


@dataclass
class DegreeBound:
    group_order: int
    q_size: int
    k: int
    q_power: int
    # log natural de |Q|·r^(4 log|Q| / log(32/29))
    polynomial_log: float
    within_q_power: bool
    within_polynomial: bool


@dataclass
class ProductQuotient:
    quotient: PermutationQuotient
    family: PartitionFamily
    group_order: int
    bound: DegreeBound
    torsion_free: bool
    diagnostic: str = ""
    coordinates: List[int] = field(default_factory=list)
