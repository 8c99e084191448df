from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.models.coxeter import CoxeterPresentation
from src.services.coxeter_service import CoxeterService

# hypothesis não aceita fixtures de escopo de função
SVC = CoxeterService()


def test_uniform_fills_every_pair(coxeter_svc):
    p = coxeter_svc.uniform(4, 3)
    assert len(p.exponents) == 6
    assert set(p.exponents.values()) == {3}
    assert coxeter_svc.uniform(1, 3).exponents == {}
    assert coxeter_svc.uniform(2, 5).exponent(2, 1) == 5


def test_uniform_rejects_small_exponent(coxeter_svc):
    with pytest.raises(ValueError):
        coxeter_svc.uniform(3, 1)


def test_presentation_rejects_asymmetric_matrix():
    with pytest.raises(ValueError):
        CoxeterPresentation(rank=2, exponents={(1, 2): 3, (2, 1): 4})


def test_euler_characteristic_examples(coxeter_svc):
    assert coxeter_svc.euler_characteristic(coxeter_svc.uniform(4, 3)) == 0
    assert coxeter_svc.euler_characteristic(coxeter_svc.uniform(5, 3)) == Fraction(1, 6)
    assert coxeter_svc.euler_characteristic(CoxeterPresentation(rank=5)) == Fraction(-3, 2)


@given(st.integers(1, 12), st.integers(2, 12))
def test_chi_of_uniform_matches_sum(r, m):
    assert SVC.chi_of_uniform(r, m) == SVC.euler_characteristic(SVC.uniform(r, m))


def test_subgroup_restricts_and_relabels(coxeter_svc):
    mixed = CoxeterPresentation(rank=3, exponents={(1, 2): 3, (2, 3): 4})
    sub = coxeter_svc.coxeter_subgroup(mixed, {1, 3})
    assert sub.rank == 2
    assert sub.exponent(1, 2) is None

    p = coxeter_svc.uniform(5, 3)
    assert coxeter_svc.coxeter_subgroup(p, {1, 2, 3}) == coxeter_svc.uniform(3, 3)
    assert coxeter_svc.coxeter_subgroup(p, range(1, 6)) == p


def test_subgroup_rejects_empty_subset(coxeter_svc):
    with pytest.raises(ValueError):
        coxeter_svc.coxeter_subgroup(coxeter_svc.uniform(3, 3), [])


@given(st.integers(2, 7), st.data())
def test_removing_a_generator_changes_chi_by_exact_amount(r, data):
    exponents = {}
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            m = data.draw(st.one_of(st.none(), st.integers(2, 9)))
            if m is not None:
                exponents[(i, j)] = m
    p = CoxeterPresentation(rank=r, exponents=exponents)
    svc = SVC
    removed = data.draw(st.integers(1, r))
    rest = [g for g in p.generators if g != removed]
    expected = svc.euler_characteristic(p) + Fraction(1, 2) - sum(
        (Fraction(1, 2 * p.exponent(removed, j)) for j in rest if p.exponent(removed, j) is not None),
        Fraction(0),
    )
    assert svc.euler_characteristic(svc.coxeter_subgroup(p, rest)) == expected


def test_dimension_predicate(coxeter_svc):
    assert coxeter_svc.has_dimension_at_most_2(coxeter_svc.uniform(4, 3))
    assert coxeter_svc.has_dimension_at_most_2(coxeter_svc.uniform(2, 2))
    spherical = CoxeterPresentation(rank=3, exponents={(1, 2): 2, (2, 3): 3, (1, 3): 5})
    assert not coxeter_svc.has_dimension_at_most_2(spherical)
    assert coxeter_svc.dimension_witness(spherical) == (1, 2, 3)


def test_diagram_omits_infinite_pairs():
    p = CoxeterPresentation(rank=3, exponents={(1, 2): 3, (2, 3): 4})
    graph = p.diagram().to_graph()
    assert sorted(graph.edges()) == [(1, 2), (2, 3)]
    assert graph.edges[2, 3]["label"] == 4
