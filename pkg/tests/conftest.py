"""
Fixtures compartilhadas: serviços e complexos montados à mão.
"""
import pytest

from src.models.complex import OneCell, TwoCell, TwoComplex
from src.services.complex_service import ComplexService
from src.services.coxeter_service import CoxeterService
from src.services.curvature_service import CurvatureService
from src.services.export_service import ExportService
from src.services.morse_service import MorseService
from src.services.partition_service import PartitionService
from src.services.probability_service import ProbabilityService
from src.services.wall_service import WallService


@pytest.fixture
def coxeter_svc():
    return CoxeterService()


@pytest.fixture
def complex_svc():
    return ComplexService()


@pytest.fixture
def wall_svc(complex_svc):
    return WallService(complex_svc)


@pytest.fixture
def morse_svc(complex_svc, wall_svc, coxeter_svc):
    return MorseService(complex_svc, wall_svc, coxeter_svc)


@pytest.fixture
def partition_svc(coxeter_svc, complex_svc):
    return PartitionService(coxeter_svc, complex_svc, greedy_pool=256)


@pytest.fixture
def probability_svc():
    return ProbabilityService()


@pytest.fixture
def curvature_svc(coxeter_svc, complex_svc):
    return CurvatureService(coxeter_svc, complex_svc)


@pytest.fixture
def export_svc():
    return ExportService()


def _cycle_edges(n):
    return tuple(OneCell(id=i, tail=i, head=(i + 1) % n) for i in range(n))


@pytest.fixture
def hexagon():
    """Um hexágono: 6 vértices, 6 arestas em ciclo, uma 2-célula."""
    boundary = tuple((i, 1) for i in range(6))
    return TwoComplex(zero_cells=6, one_cells=_cycle_edges(6), two_cells=(TwoCell(0, boundary),))


@pytest.fixture
def efef_square():
    """Quadrado com bordo e f e f: e: u->v, f: v->u."""
    one_cells = (OneCell(0, 0, 1), OneCell(1, 1, 0))
    boundary = ((0, 1), (1, 1), (0, 1), (1, 1))
    return TwoComplex(zero_cells=2, one_cells=one_cells, two_cells=(TwoCell(0, boundary),))


@pytest.fixture
def theta_graph():
    """Dois vértices e três arestas paralelas, sem 2-células."""
    return TwoComplex(zero_cells=2, one_cells=tuple(OneCell(i, 0, 1) for i in range(3)))


@pytest.fixture
def two_cycle():
    """Dois vértices ligados por e: u->v e f: v->u, sem 2-células."""
    return TwoComplex(zero_cells=2, one_cells=(OneCell(0, 0, 1), OneCell(1, 1, 0)))


@pytest.fixture
def osculating_hexagons():
    """
    Dois hexágonos que compartilham a aresta c. A parede {a, c, b} volta ao
    vértice x = 0 pelas arestas a e b, tocando link(x) em dois vértices.
    """
    edges = [
        (0, 1),  # 0 a
        (1, 2),  # 1 g1
        (2, 3),  # 2 g2
        (3, 4),  # 3 c
        (4, 5),  # 4 g3
        (5, 0),  # 5 g4
        (4, 6),  # 6 h1
        (6, 0),  # 7 h2
        (0, 7),  # 8 b
        (7, 8),  # 9 h3
        (8, 3),  # 10 h4
    ]
    one_cells = tuple(OneCell(i, tail, head) for i, (tail, head) in enumerate(edges))
    first = TwoCell(0, tuple((i, 1) for i in (0, 1, 2, 3, 4, 5)))
    second = TwoCell(1, tuple((i, 1) for i in (3, 6, 7, 8, 9, 10)))
    return TwoComplex(zero_cells=9, one_cells=one_cells, two_cells=(first, second))
