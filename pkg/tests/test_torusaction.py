from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gm_lefschetz import InvalidInputError
from gm_lefschetz.torusaction import (ConormalLine, FixedComponent, LinearAction, fixed_locus,
                                      is_purely_nonhyperbolic, tangent_split)


def test_weights_length_checked():
    with pytest.raises(InvalidInputError, match="n\\+1"):
        LinearAction(1, (1,))
    with pytest.raises(InvalidInputError):
        LinearAction(-1, ())
    with pytest.raises(InvalidInputError):
        LinearAction(1, (1, 0.5))


def test_projective_line():
    first, second = fixed_locus(LinearAction.of(1, 0))
    assert first == FixedComponent(1, (0,), (ConormalLine(0, 1, 1),))
    assert second == FixedComponent(0, (1,), (ConormalLine(0, -1, 1),))


def test_line_and_point_in_the_plane():
    line, point = fixed_locus(LinearAction.of(1, 1, 0))
    assert line.indices == (0, 1) and line.dim == 1
    assert line.conormal == (ConormalLine(-1, 1, 1),)
    assert point.indices == (2,) and point.dim == 0
    assert point.conormal == (ConormalLine(0, -1, 2),)


def test_trivial_action_has_one_component():
    (comp,) = fixed_locus(LinearAction.of(0, 0, 0))
    assert comp.dim == 2 and comp.conormal == ()


def test_tangent_split_examples():
    action = LinearAction.of(1, 1, 0)
    line, point = fixed_locus(action)
    assert tangent_split(action, line) == (1, (ConormalLine(-1, 1, 1),), ())
    assert tangent_split(action, point) == (0, (), (ConormalLine(0, -1, 2),))
    trivial = LinearAction.of(4, 4, 4, 4)
    assert tangent_split(trivial, fixed_locus(trivial)[0]) == (3, (), ())


def test_tangent_split_rejects_foreign_component():
    comp = fixed_locus(LinearAction.of(1, 0))[0]
    with pytest.raises(InvalidInputError):
        tangent_split(LinearAction.of(2, 0), comp)


def test_hyperbolicity_examples():
    assert is_purely_nonhyperbolic(LinearAction.of(1, 0))
    check = is_purely_nonhyperbolic(LinearAction.of(0, 1, 2))
    assert not check and check.witness.weight == 1
    assert {x.character for x in check.witness.conormal} == {1, -1}
    assert is_purely_nonhyperbolic(LinearAction.of(5, 5, 5))


def test_component_json_round_trip():
    for comp in fixed_locus(LinearAction.of(2, -1, 2, 0)):
        assert FixedComponent.from_json(comp.to_json()) == comp
    with pytest.raises(InvalidInputError):
        FixedComponent.from_json({"weight": 1})


weights_st = st.integers(0, 3).flatmap(lambda n: st.lists(st.integers(-3, 3), min_size=n + 1,
                                                          max_size=n + 1))


@given(weights_st)
def test_components_partition_the_coordinates(weights):
    action = LinearAction.of(*weights)
    comps = fixed_locus(action)
    assert sorted(i for c in comps for i in c.indices) == list(range(len(weights)))
    assert sum(c.dim + 1 for c in comps) == action.n + 1
    assert [c.weight for c in comps] == sorted({*weights}, reverse=True)
    for c in comps:
        split = tangent_split(action, c)
        assert split.zero_dim + sum(x.mult for x in split.plus + split.minus) == action.n
        assert all(x.character != 0 for x in c.conormal)
        assert all(x.degree == (0 if c.dim == 0 else -1) for x in c.conormal)


@given(weights_st)
def test_conormal_antisymmetry(weights):
    comps = {c.weight: c for c in fixed_locus(LinearAction.of(*weights))}
    for a, comp in comps.items():
        for line in comp.conormal:
            b = a - line.character
            back = [x for x in comps[b].conormal if x.character == -line.character]
            assert len(back) == 1
            assert back[0].mult == len(comp.indices)
            assert line.mult == len(comps[b].indices)


def test_nonhyperbolic_iff_two_values():
    for n in range(4):
        for weights in product(range(-2, 3), repeat=n + 1):
            check = is_purely_nonhyperbolic(LinearAction.of(*weights))
            assert bool(check) == (len(set(weights)) <= 2)
            if not check:
                assert min(weights) < check.witness.weight < max(weights)
