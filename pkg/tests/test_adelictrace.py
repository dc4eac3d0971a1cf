from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gm_lefschetz import InvalidInputError, NotApplicableError
from gm_lefschetz.adelictrace import (biseries, exactness_defect, local_ring_trace,
                                      single_filtration_trace, trace_pq)
from gm_lefschetz.cohomology import VirtualBundle, euler_sequence, lefschetz_direct
from gm_lefschetz.exactnum import LAMBDA, LaurentPoly, RationalFunction, expand
from gm_lefschetz.localization import localize, localize_points
from gm_lefschetz.torusaction import LinearAction, fixed_locus

from oracles import power_series_count

ONE = RationalFunction.one()


def test_local_ring_examples():
    assert local_ring_trace([1]) == ONE / (ONE - LAMBDA)
    assert local_ring_trace([1, 2]) == ONE / ((ONE - LAMBDA) * (ONE - LAMBDA**2))
    assert local_ring_trace([], 3) == LAMBDA**3
    with pytest.raises(InvalidInputError):
        local_ring_trace([0])
    with pytest.raises(InvalidInputError):
        local_ring_trace([1.0])


@pytest.mark.parametrize("chars", [[1], [2], [1, 1], [1, 2], [2, 3, 1], [1, 1, 1]])
def test_local_ring_counts_monomials(chars):
    order = 12
    series = expand(local_ring_trace(chars), "zero", order)
    counts = power_series_count(chars, order)
    assert [series.coeffs.get(e, 0) for e in range(order + 1)] == counts


def test_graded_pieces_on_the_line():
    action = LinearAction.of(1, 0)
    top, bottom = fixed_locus(action)
    o = VirtualBundle.line(0)
    for p in range(5):
        # the only cotangent direction at the attracting point has character 1
        assert trace_pq(action, o, top, p, 0) == LaurentPoly({p: 1})
        assert trace_pq(action, o, top, p, 1).is_zero()
        assert trace_pq(action, o, bottom, 0, p) == LaurentPoly({-p: 1})


def test_graded_pieces_at_a_hyperbolic_point():
    action = LinearAction.of(0, 1, 2)
    middle = fixed_locus(action)[1]
    for p, q in product(range(4), repeat=2):
        assert trace_pq(action, VirtualBundle.line(0), middle, p, q) == LaurentPoly({p - q: 1})
    with pytest.raises(InvalidInputError):
        trace_pq(action, VirtualBundle.line(0), middle, -1, 0)


def test_biseries_on_the_line():
    report = biseries(LinearAction.of(1, 0), VirtualBundle.line(0))
    assert report.total == ONE and report.passed
    stage_two = report.certificates[-1]
    assert stage_two.stage == 2
    assert stage_two.certificate.valuations == tuple(range(1, 10))


def test_biseries_twist_example():
    report = biseries(LinearAction.of(1, 0), VirtualBundle.line(-2))
    assert report.total == RationalFunction.from_laurent({1: -1})
    assert report.passed


def test_biseries_constant_lag_on_a_curve():
    report = biseries(LinearAction.of(1, 1, 0), VirtualBundle.line(0))
    assert report.total == ONE
    stage_two = report.certificates[-1].certificate
    assert stage_two.valuations[:3] == (2, 2, 3)
    assert report.passed and not stage_two.strictly_increasing


def test_biseries_validation():
    with pytest.raises(InvalidInputError):
        biseries(LinearAction.of(1, 0), VirtualBundle.line(0), p_max=0)
    with pytest.raises(InvalidInputError):
        single_filtration_trace(LinearAction.of(1, 0), VirtualBundle.line(0), p_max=0)


def test_biseries_json_shape():
    data = biseries(LinearAction.of(1, 0), VirtualBundle.line(1), 2, 2).to_json()
    assert set(data) == {"tr_pq", "tr_p", "total", "certificates"}
    assert len(data["tr_pq"]) == 3 * 3
    assert {c["stage"] for c in data["certificates"]} == {1, 2}


def test_filtration_on_the_line():
    report = single_filtration_trace(LinearAction.of(1, 0), VirtualBundle.line(0))
    zero, infinity = report.per_component
    assert zero.point == "zero" and zero.value == ONE / (ONE - LAMBDA)
    assert infinity.point == "infinity" and infinity.value == -LAMBDA / (ONE - LAMBDA)
    assert report.total == ONE and report.passed


def test_filtration_rejects_hyperbolic_actions():
    with pytest.raises(NotApplicableError) as err:
        single_filtration_trace(LinearAction.of(0, 1, 2), VirtualBundle.line(0))
    assert err.value.witness.weight == 1


def test_filtration_on_trivial_action():
    report = single_filtration_trace(LinearAction.of(0, 0, 0), VirtualBundle.line(2, 1))
    (part,) = report.per_component
    assert part.point == "zero" and part.value == LAMBDA.scale(6)


def test_exactness_defect_examples():
    action = LinearAction.of(1, 0)
    assert exactness_defect(action, euler_sequence(action)).is_zero()
    assert exactness_defect(action, [VirtualBundle.line(0), VirtualBundle.line(1)]) == -LAMBDA**-1


def test_euler_defects_vanish():
    for n in range(1, 4):
        for weights in product(range(-2, 3), repeat=n + 1):
            if len(set(weights)) > 2:
                continue
            action = LinearAction.of(*weights)
            for d in range(-3, 4):
                assert exactness_defect(action, euler_sequence(action, twist=d)).is_zero()


def test_finite_locus_is_a_sum_of_local_rings():
    for weights in [(1, 0), (2, 0, -1), (0, 1, 3), (3, 1, 0, -2)]:
        action = LinearAction.of(*weights)
        total = RationalFunction.zero()
        for comp in fixed_locus(action):
            total = total + local_ring_trace([x.character for x in comp.conormal])
        assert total == localize_points(action, VirtualBundle.line(0))


weights_st = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.integers(-2, 2), min_size=n + 1, max_size=n + 1))
term_st = st.tuples(st.integers(-4, 4), st.integers(-2, 2), st.integers(-2, 2))


@settings(max_examples=60)
@given(weights_st, st.lists(term_st, min_size=1, max_size=2))
def test_biseries_agrees_and_certifies(weights, terms):
    action = LinearAction.of(*weights)
    bundle = VirtualBundle(terms)
    report = biseries(action, bundle, 6, 6)
    assert report.total == localize(action, bundle).total == lefschetz_direct(action, bundle)
    assert report.passed


@settings(max_examples=60)
@given(weights_st, st.integers(-4, 4), st.integers(-2, 2))
def test_biseries_character_twist(weights, l, c):
    action = LinearAction.of(*weights)
    base = biseries(action, VirtualBundle.line(l), 4, 4)
    assert biseries(action, VirtualBundle.line(l, c), 4, 4) == base.shift(c)


@settings(max_examples=60)
@given(weights_st.filter(lambda w: len(set(w)) <= 2), st.lists(term_st, min_size=1, max_size=2))
def test_filtration_agrees_and_certifies(weights, terms):
    action = LinearAction.of(*weights)
    bundle = VirtualBundle(terms)
    report = single_filtration_trace(action, bundle, 6)
    assert report.total == lefschetz_direct(action, bundle)
    assert report.passed


def test_stage_tables_are_the_graded_pieces():
    action = LinearAction.of(2, 0, -1)
    bundle = VirtualBundle([(1, 1, 1), (-2, 0, 2)])
    report = biseries(action, bundle, 3, 3)
    tables = {}
    for comp in fixed_locus(action):
        for p, q in product(range(4), repeat=2):
            tables[p, q] = tables.get((p, q), LaurentPoly()) + trace_pq(action, bundle, comp, p, q)
    assert {(p, q): v for p, row in enumerate(report.tr_pq) for q, v in enumerate(row)} == tables
