import math
from decimal import Decimal
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from src.models.probability import LinkModel, MonteCarloResult
from src.services.probability_service import ProbabilityService

SVC = ProbabilityService()


def test_formula_examples():
    assert SVC.p1(3) == Fraction(1, 8)
    assert SVC.p2_bound(2, 3) == Fraction(1, 4)
    assert SVC.p2_bound(4, 3) == Fraction(147, 128)
    assert SVC.total_failure_bound(2, 3) == 1


def test_formula_argument_checks():
    with pytest.raises(ValueError):
        SVC.p1(0)
    with pytest.raises(ValueError):
        SVC.p2_bound(1, 3)
    with pytest.raises(ValueError):
        SVC.total_failure_bound(5, 2)


@given(st.integers(min_value=20, max_value=200))
def test_total_bound_eventually_decreases(r):
    assert SVC.total_failure_bound(r + 1, 3) < SVC.total_failure_bound(r, 3)


def test_exact_failure_for_single_edge():
    exact = SVC.exact_failure_small(LinkModel(2, 3))
    assert exact.ascending == Fraction(3, 8)
    assert exact.descending == Fraction(3, 8)
    assert exact.either == Fraction(1, 2)
    assert exact.no_ascending_vertex == Fraction(1, 4)


@pytest.mark.parametrize("r, m", [(2, 3), (3, 3), (3, 4), (4, 3), (5, 3)])
def test_exact_failure_respects_union_bound(r, m):
    exact = SVC.exact_failure_small(LinkModel(r, m))
    assert exact.no_ascending_vertex == SVC.p1(r)
    assert exact.either <= SVC.total_failure_bound(r, m)
    assert exact.ascending == exact.descending


def test_exact_enumeration_bit_budget():
    with pytest.raises(ValueError):
        SVC.exact_failure_small(LinkModel(5, 4))


def test_link_model_requires_m_at_least_three():
    with pytest.raises(ValueError):
        LinkModel(3, 2)


def test_all_walls_up_pattern():
    model = LinkModel(4, 3)
    sample = SVC.classify_pattern(model, (1 << model.bit_count) - 1)
    assert not sample.ascending_fails
    assert sample.condition_one and sample.condition_two
    assert not sample.descending_nonempty
    assert sample.descending_fails


def test_pattern_out_of_range():
    model = LinkModel(3, 3)
    with pytest.raises(ValueError):
        SVC.classify_pattern(model, 1 << model.bit_count)


def test_monte_carlo_agrees_with_enumeration():
    model = LinkModel(3, 3)
    exact = SVC.exact_failure_small(model)
    result = SVC.monte_carlo_failure(model, 20000, seed=99)
    for count, probability in [
        (result.either_failures, exact.either),
        (result.ascending_failures, exact.ascending),
    ]:
        sigma = math.sqrt(float(probability * (1 - probability)) / result.trials)
        assert abs(result.estimate(count) - float(probability)) <= 3 * sigma


@pytest.mark.slow
def test_monte_carlo_million_trials_no_ascending_vertex():
    model = LinkModel(4, 3)
    trials = 10 ** 6
    result = SVC.monte_carlo_failure(model, trials, seed=2024, streams=4)
    p = float(SVC.p1(4))
    assert p == 1 / 16
    sigma = math.sqrt(p * (1 - p) / trials)
    assert abs(result.estimate(result.no_ascending_vertex) - p) <= 3 * sigma


@pytest.mark.slow
def test_monte_carlo_million_trials_rank_ten():
    model = LinkModel(10, 3)
    result = SVC.monte_carlo_failure(model, 10 ** 6, seed=5, streams=4)
    assert result.trials == 10 ** 6
    assert result.estimate(result.either_failures) <= float(SVC.total_failure_bound(10, 3))


def test_monte_carlo_streams_are_deterministic():
    model = LinkModel(4, 3)
    first = SVC.monte_carlo_failure(model, 1001, seed=3, streams=4)
    second = SVC.monte_carlo_failure(model, 1001, seed=3, streams=4)
    assert first == second
    assert first.trials == 1001


def test_monte_carlo_argument_checks():
    model = LinkModel(3, 3)
    with pytest.raises(ValueError):
        SVC.monte_carlo_failure(model, 0, seed=1)
    with pytest.raises(ValueError):
        SVC.monte_carlo_failure(model, 10, seed=1, streams=0)


def test_merge_is_associative():
    a = MonteCarloResult(10, 1, 2, 3, 0, 1)
    b = MonteCarloResult(20, 4, 0, 4, 2, 0)
    c = MonteCarloResult(5, 0, 1, 1, 0, 0)
    assert a.merge(b).merge(c) == a.merge(b.merge(c))
    assert a.merge(b).trials == 30


def test_sweep_rows():
    rows = SVC.sweep([2, 3, 9], 3, trials=500, seed=1)
    assert [row["r"] for row in rows] == [2, 3, 9]
    assert rows[0]["exact_either"] == "1/2"
    assert rows[2]["exact_either"] == ""
    assert rows == SVC.sweep([2, 3, 9], 3, trials=500, seed=1)


def test_threshold_rank_is_two_sided():
    r = SVC.threshold_rank(3, 2)
    assert 1500 <= r <= 2000
    assert SVC.threshold_margin(r, 3, 2) > 0
    assert SVC.threshold_margin(r - 1, 3, 2) <= 0


def test_threshold_rank_grows_with_parameters():
    base = SVC.threshold_rank(3, 2)
    assert SVC.threshold_rank(4, 2) >= base
    assert SVC.threshold_rank(3, 6) >= base


def test_threshold_argument_checks():
    with pytest.raises(ValueError):
        SVC.threshold_rank(2, 6)
    with pytest.raises(ValueError):
        SVC.threshold_rank(3, 1)


@pytest.mark.parametrize("orders, expected", [
    ([3, 3], 6),
    ([3, 3, 3], 17),
    ([5], 5),
    ([2, 7], 7),
    ([2, 2], 2),
])
def test_ramsey_upper_bound(orders, expected):
    assert SVC.ramsey_upper_bound(orders) == expected


def test_ramsey_argument_checks():
    with pytest.raises(ValueError):
        SVC.ramsey_upper_bound([])
    with pytest.raises(ValueError):
        SVC.ramsey_upper_bound([3, 1])


def test_ramsey_two_colours_uses_closed_form():
    assert SVC.ramsey_upper_bound([600, 600]) == comb(1198, 599)
    assert SVC.ramsey_upper_bound([2, 2, 40, 2, 30]) == comb(68, 29)


def test_ramsey_three_colours_small_box():
    assert SVC.ramsey_upper_bound([3, 3, 4]) == 36
    assert SVC.ramsey_upper_bound([4, 3, 3]) == 36


@given(st.integers(min_value=3, max_value=60), st.integers(min_value=3, max_value=60))
def test_ramsey_two_colours_satisfy_recurrence(a, b):
    assert SVC.ramsey_upper_bound([a, b]) == (
        SVC.ramsey_upper_bound([a - 1, b]) + SVC.ramsey_upper_bound([a, b - 1])
    )


def test_ramsey_large_box_falls_back_to_multinomial():
    expected = math.factorial(597) // math.factorial(199) ** 3
    assert SVC.ramsey_upper_bound([200, 200, 200]) == expected


def test_nonuniform_threshold_single_exponent_is_threshold_rank():
    result = SVC.nonuniform_threshold(3, 2)
    assert result.ranks == {3: SVC.threshold_rank(3, 2)}
    assert result.bound == SVC.threshold_rank(3, 2)


def test_nonuniform_threshold_two_exponents():
    result = SVC.nonuniform_threshold(4, 2)
    r3, r4 = result.ranks[3], result.ranks[4]
    assert r4 >= r3
    assert result.bound == comb(r3 + r4 - 2, r3 - 1)
    assert Decimal(result.to_dict()["bound"]) == result.bound
    assert result.to_dict()["bound_bits"] == result.bound.bit_length()


def test_nonuniform_threshold_argument_checks():
    with pytest.raises(ValueError):
        SVC.nonuniform_threshold(2, 6)
