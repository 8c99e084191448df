"""
Modelo de 2-complexos angulados. Ângulos são múltiplos racionais de π.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.models.complex import LinkEdge, LinkVertex, TwoComplex

# canto = (id da 2-célula, posição no bordo)
Corner = Tuple[int, int]


@dataclass(frozen=True)
class AngledComplex:
    base: TwoComplex
    # ângulo de cada canto, em unidades de π
    angles: Dict[Corner, Fraction]

    def angle(self, corner: Corner) -> Fraction:
        return self.angles[corner]

    def deficiency(self, corner: Corner) -> Fraction:
        return 1 - self.angles[corner]


@dataclass(frozen=True)
class SectionSpec:
    x: int
    vertices: Tuple[LinkVertex, ...]
    edges: Tuple[LinkEdge, ...]


@dataclass
class SectionalVerdict:
    nonpositive: bool
    witness: Optional[Tuple[int, ...]] = None
    witness_chi: Optional[Fraction] = None
    dimension_at_most_2: bool = True


@dataclass
class BruteForceSection:
    x: int
    sections_checked: int
    max_curvature: Optional[Fraction] = None
    argmax: Optional[SectionSpec] = None


@dataclass
class QuasiconvexVerdict:
    applicable: bool
    holds: Optional[bool] = None
    reason: str = ""


@dataclass
class CurvatureReport:
    cell_curvatures: Dict[int, Fraction] = field(default_factory=dict)
    vertex_curvatures: Dict[int, Fraction] = field(default_factory=dict)
    section_curvatures: List[Tuple[int, Fraction]] = field(default_factory=list)
    planar_nonpositive: bool = True
    sectional: Optional[SectionalVerdict] = None
    negative_sufficient: Optional[bool] = None
    quasiconvex: Optional[QuasiconvexVerdict] = None
