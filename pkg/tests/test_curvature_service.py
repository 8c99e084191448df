from fractions import Fraction

import pytest

from src.models.complex import OneCell, TwoComplex
from src.models.coxeter import CoxeterPresentation
from src.models.curvature import AngledComplex
from src.models.errors import SizeCapExceeded
from src.services.complex_service import ComplexService
from src.services.coxeter_service import CoxeterService
from src.services.curvature_service import CurvatureService

COXETER = CoxeterService()
COMPLEX = ComplexService()
SVC = CurvatureService(COXETER, COMPLEX)


def compressed_uniform(r, m=3):
    p = COXETER.uniform(r, m)
    return p, COMPLEX.compress(COMPLEX.regular_cover(p, COMPLEX.star_quotient(r)), p)


@pytest.fixture(scope="module")
def rank_four():
    p, k = compressed_uniform(4)
    return p, SVC.regular_euclidean_angles(k)


def test_regular_hexagon_is_flat(hexagon):
    ac = SVC.regular_euclidean_angles(hexagon)
    assert set(ac.angles.values()) == {Fraction(2, 3)}
    assert SVC.cell_curvature(ac, 0) == 0


def test_right_angled_hexagon_is_negatively_curved(hexagon):
    ac = AngledComplex(base=hexagon, angles={(0, position): Fraction(1, 2) for position in range(6)})
    assert SVC.cell_curvature(ac, 0) == -1


def test_hexagon_vertex_curvature(hexagon):
    ac = SVC.regular_euclidean_angles(hexagon)
    assert all(SVC.vertex_curvature(ac, x) == Fraction(1, 3) for x in range(6))


def test_cell_curvature_rejects_unknown_cell(hexagon):
    with pytest.raises(ValueError):
        SVC.cell_curvature(SVC.regular_euclidean_angles(hexagon), 1)


def test_digons_have_no_regular_metric():
    k = COMPLEX.presentation_complex(COXETER.uniform(2, 3))
    with pytest.raises(ValueError):
        SVC.regular_euclidean_angles(k)


def test_compressed_vertex_curvature_is_twice_chi(rank_four):
    p, ac = rank_four
    chi = COXETER.euler_characteristic(p)
    assert chi == 0
    for x in (0, 17, 119):
        assert SVC.vertex_curvature(ac, x) == 2 * chi
        section = SVC.full_link_section(ac.base, x)
        assert SVC.is_regular(section)
        assert SVC.section_curvature(ac, section) == 2 * chi


def test_brute_force_rank_four_maximum_is_zero(rank_four):
    _, ac = rank_four
    result = SVC.brute_force_sectional_at(ac, 0)
    assert result.max_curvature == 0
    # quatro triângulos e K4 inteiro
    assert result.sections_checked >= 5


@pytest.mark.slow
def test_brute_force_rank_five_maximum():
    _, k = compressed_uniform(5)
    ac = SVC.regular_euclidean_angles(k)
    result = SVC.brute_force_sectional_at(ac, 0)
    assert result.max_curvature == Fraction(1, 3)
    assert len(result.argmax.vertices) == 5


def test_forest_link_has_no_sections(hexagon):
    result = SVC.brute_force_sectional_at(SVC.regular_euclidean_angles(hexagon), 0)
    assert result.sections_checked == 0
    assert result.argmax is None
    assert result.max_curvature is None


def test_brute_force_link_cap():
    star = TwoComplex(zero_cells=9, one_cells=tuple(OneCell(i, 0, i + 1) for i in range(8)))
    with pytest.raises(SizeCapExceeded):
        SVC.brute_force_sectional_at(AngledComplex(base=star, angles={}), 0)


def test_irregular_section_is_rejected(hexagon):
    ac = SVC.regular_euclidean_angles(hexagon)
    section = SVC.full_link_section(hexagon, 0)
    assert not SVC.is_regular(section)
    with pytest.raises(ValueError):
        SVC.section_curvature(ac, section)


def test_sectional_verdicts():
    assert SVC.has_nonpositive_sectional(COXETER.uniform(4, 3)).nonpositive
    verdict = SVC.has_nonpositive_sectional(COXETER.uniform(5, 3))
    assert not verdict.nonpositive
    assert verdict.witness == (1, 2, 3, 4, 5)
    assert verdict.witness_chi == Fraction(1, 6)


def test_sectional_flags_finite_triples():
    verdict = SVC.has_nonpositive_sectional(COXETER.uniform(3, 2))
    assert not verdict.dimension_at_most_2


def test_negative_sectional_sufficient():
    assert SVC.negative_sectional_sufficient(COXETER.uniform(5, 4))
    assert not SVC.negative_sectional_sufficient(COXETER.uniform(5, 3))
    with pytest.raises(ValueError):
        SVC.negative_sectional_sufficient(COXETER.uniform(2, 7))


def test_locally_quasiconvex_sufficient():
    assert SVC.locally_quasiconvex_sufficient(COXETER.uniform(5, 8)).holds
    assert SVC.locally_quasiconvex_sufficient(COXETER.uniform(5, 7)).holds is False
    mixed = CoxeterPresentation(rank=3, exponents={(1, 2): 3, (1, 3): 5, (2, 3): 5})
    verdict = SVC.locally_quasiconvex_sufficient(mixed)
    assert not verdict.applicable
    assert verdict.reason


def test_curvature_report(rank_four):
    p, ac = rank_four
    report = SVC.curvature_report(p, ac)
    assert set(report.cell_curvatures.values()) == {0}
    assert set(report.vertex_curvatures.values()) == {0}
    assert len(report.section_curvatures) == 120
    assert report.sectional.nonpositive
    assert report.negative_sufficient is False
    assert report.quasiconvex.holds is False
