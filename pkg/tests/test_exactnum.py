import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from gm_lefschetz import InvalidInputError, UndefinedValuationError
from gm_lefschetz.exactnum import (LAMBDA, BoundarySeries, LaurentPoly, RationalFunction,
                                   converges_to, difference_valuation, expand, rf_arith,
                                   rf_normalize, valuation)
from gm_lefschetz.exactnum import _poly as P

from oracles import LAM, poly_expr, same, series_sympy, to_sympy

ONE = RationalFunction.one()


def rf(num, den=(1,)):
    return rf_normalize(num, den)


def geometric(w):
    return ONE / (ONE - LAMBDA**w)


# -- examples ---------------------------------------------------------------

def test_normalize_cancels_common_factor():
    assert rf_normalize((-1, 0, 1), (-1, 1)) == rf((1, 1))


def test_normalize_identity_case():
    assert rf_normalize((1, -1), (1, -1)) == ONE


def test_normalize_laurent_denominator():
    x = rf_normalize(LaurentPoly({0: 1}), LaurentPoly({0: 1, -1: -1}))
    assert same(x, LAM / (LAM - 1))
    assert x == LAMBDA / (LAMBDA - 1)


def test_normalize_rejects_zero_denominator():
    with pytest.raises(InvalidInputError):
        rf_normalize((1,), ())


def test_geometric_pair_sums_to_one():
    assert geometric(1) + geometric(-1) == ONE


def test_inverse_example():
    x = rf((1, 0, 3), (-2, 1))
    assert rf_arith("mul", x, rf_arith("invert", x)) == ONE


def test_shifted_geometric_pair():
    x = LAMBDA**-1 * geometric(1) + geometric(-1)
    assert x == RationalFunction.from_laurent({-1: 1, 0: 1})


def test_division_by_zero_function():
    with pytest.raises(InvalidInputError):
        rf_arith("div", ONE, RationalFunction.zero())
    with pytest.raises(InvalidInputError):
        RationalFunction.zero().invert()


def test_unknown_operation():
    with pytest.raises(InvalidInputError):
        rf_arith("pow", ONE, ONE)


def test_expand_geometric_at_zero():
    assert expand(geometric(1), "zero", 3).coeffs == {0: 1, 1: 1, 2: 1, 3: 1}


def test_expand_geometric_at_infinity():
    assert expand(geometric(1), "infinity", 2).coeffs == {1: -1, 2: -1}


def test_expand_constant():
    assert expand(ONE, "zero", 5).coeffs == {0: 1}


def test_expand_zero_function_is_empty():
    assert expand(RationalFunction.zero(), "infinity", 4).coeffs == {}


def test_valuation_examples():
    assert valuation(LAMBDA**2 * geometric(1), "zero") == 2
    assert valuation(geometric(1), "infinity") == 1
    assert valuation(ONE, "zero") == 0


def test_valuation_of_zero_is_undefined():
    with pytest.raises(UndefinedValuationError):
        valuation(RationalFunction.zero(), "zero")


def test_bad_point():
    with pytest.raises(InvalidInputError):
        valuation(ONE, "one")


def geometric_partials(k):
    out, acc = [], RationalFunction.zero()
    for p in range(k):
        acc = acc + LAMBDA**p
        out.append(acc)
    return out


def test_certificate_geometric_passes():
    cert = converges_to(geometric_partials(8), geometric(1), "zero")
    assert cert.passed
    assert cert.valuations == tuple(range(1, 9))
    assert cert.strictly_increasing


def test_certificate_constant_sequence():
    x = rf((1, 2), (3, 0, 1))
    for point in ("zero", "infinity"):
        cert = converges_to([x, x, x], x, point)
        assert cert.passed
        assert cert.valuations == (None, None, None)
        assert cert.margin is None


def test_certificate_wrong_limit_fails_at_index_one():
    cert = converges_to(geometric_partials(6), ONE / (ONE - LAMBDA.scale(2)), "zero")
    assert not cert.passed
    assert cert.failed_index == 1


def test_certificate_offset_allows_a_constant_lag():
    # valuations 2, 2, 3, ... pass with offset 0 but are not strictly increasing
    partials = [LAMBDA**2, LAMBDA**2]
    cert = converges_to(partials, RationalFunction.zero(), "zero")
    assert cert.passed and not cert.strictly_increasing
    assert not converges_to(partials, RationalFunction.zero(), "zero", offset=2).passed


def test_certificate_shift_matches_recomputation():
    partials = geometric_partials(5)
    limit = geometric(1)
    cert = converges_to(partials, limit, "infinity", offset=-1)
    for k in (-3, 2):
        moved = converges_to([s.shift(k) for s in partials], limit.shift(k), "infinity", -1 - k)
        assert cert.shift(k) == moved


def test_certificate_requires_partials():
    with pytest.raises(ValueError):
        converges_to([], ONE, "zero")


def test_string_form():
    assert str(geometric(1)) == "1/(1 - λ)"
    assert str(RationalFunction.from_laurent({-1: 1, 0: 1})) == "(1 + λ)/λ"
    assert str(RationalFunction.zero()) == "0"


def test_json_shape():
    data = rf((1, 0, 3), (-2, 1)).to_json()
    assert data == {"num": [["-1", 0], ["-3", 2]], "den": [["2", 0], ["-1", 1]]}
    assert RationalFunction.from_json(json.loads(json.dumps(data))) == rf((1, 0, 3), (-2, 1))


def test_json_rejects_malformed():
    with pytest.raises(InvalidInputError):
        RationalFunction.from_json({"num": []})
    with pytest.raises(InvalidInputError):
        RationalFunction.from_json({"num": [["1", 0]], "den": []})


def test_laurent_basics():
    p = LaurentPoly({-1: 2, 3: Fraction(1, 2), 0: 0})
    assert p.valuation() == -1 and p.degree() == 3
    assert dict(p.items()) == {-1: 2, 3: Fraction(1, 2)}
    assert p.invert_variable() == LaurentPoly({1: 2, -3: Fraction(1, 2)})
    assert LaurentPoly.from_json(p.to_json()) == p
    assert p.truncate(0) == LaurentPoly({-1: 2})
    assert str(LaurentPoly({0: 1, 1: -2, 2: 1})) == "1 - 2λ + λ^2"


def test_large_coefficients_survive_json():
    big = 3**90
    x = rf((big, 1), (1, 0, 7))
    assert RationalFunction.from_json(json.loads(json.dumps(x.to_json()))) == x


def test_gcd_examples():
    assert P.gcd_poly((-1, 0, 1), (-1, 1)) == (-1, 1)
    assert P.gcd_poly((0, 0, 2), (0, 4)) == (0, 2)
    assert P.gcd_poly((1, 1), (1, -1)) == (1,)


# -- properties -------------------------------------------------------------

coeff = st.integers(-6, 6)
poly_st = st.lists(coeff, min_size=1, max_size=7)
nonzero_poly = poly_st.filter(lambda c: any(c))


@st.composite
def rational_functions(draw):
    return rf_normalize(tuple(draw(poly_st)), tuple(draw(nonzero_poly)))


@st.composite
def nonzero_rational_functions(draw):
    return rf_normalize(tuple(draw(nonzero_poly)), tuple(draw(nonzero_poly)))


@given(nonzero_poly, nonzero_poly)
def test_normalize_matches_sympy(num, den):
    x = rf_normalize(tuple(num), tuple(den))
    assert sympy.cancel(to_sympy(x) - poly_expr(num) / poly_expr(den)) == 0


@given(rational_functions())
def test_canonical_form(x):
    assert x.den and x.den[P.low_degree(x.den)] > 0
    if x.num:
        assert P.gcd_poly(x.num, x.den) == (1,)
    assert rf_normalize(x.num, x.den) == x


@given(nonzero_poly, nonzero_poly)
def test_gcd_matches_sympy(f, g):
    ours = poly_expr(P.gcd_poly(P.strip(f), P.strip(g)))
    ref = sympy.gcd(poly_expr(f), poly_expr(g))
    assert sympy.simplify(ours / ref).is_number


@given(rational_functions(), rational_functions(), rational_functions())
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == RationalFunction.zero()


@given(nonzero_rational_functions())
def test_multiplicative_inverse(x):
    assert x * x.invert() == ONE


@given(rational_functions(), rational_functions())
def test_arithmetic_matches_sympy(x, y):
    assert sympy.cancel(to_sympy(x + y) - (to_sympy(x) + to_sympy(y))) == 0
    assert sympy.cancel(to_sympy(x * y) - to_sympy(x) * to_sympy(y)) == 0


@settings(max_examples=40)
@given(nonzero_rational_functions(), st.sampled_from(["zero", "infinity"]))
def test_expand_matches_sympy(x, point):
    order = 6
    ours = {e: Fraction(c) for e, c in expand(x, point, order).coeffs.items()}
    ref = {e: Fraction(int(c.p), int(c.q)) for e, c in series_sympy(to_sympy(x), point, order).items()}
    assert ours == ref


@given(nonzero_rational_functions(), nonzero_rational_functions(),
       st.sampled_from(["zero", "infinity"]))
def test_expand_is_multiplicative(x, y, point):
    order = 8
    prod = expand(x, point, order) * expand(y, point, order)
    direct = expand(x * y, point, prod.order)
    assert direct.coeffs == prod.coeffs


@given(nonzero_rational_functions(), st.sampled_from(["zero", "infinity"]))
def test_expand_extends_lower_orders(x, point):
    low, high = expand(x, point, 3), expand(x, point, 9)
    assert high.truncate(3).coeffs == low.coeffs


@given(nonzero_rational_functions(), nonzero_rational_functions(),
       st.sampled_from(["zero", "infinity"]))
def test_valuation_laws(x, y, point):
    assert valuation(x * y, point) == valuation(x, point) + valuation(y, point)
    s = x + y
    if s:
        assert valuation(s, point) >= min(valuation(x, point), valuation(y, point))


@given(rational_functions(), rational_functions(), st.sampled_from(["zero", "infinity"]))
def test_difference_valuation(x, y, point):
    d = x - y
    expected = None if not d else valuation(d, point)
    assert difference_valuation(x, y, point) == expected
    if x.is_laurent():
        assert difference_valuation(x.to_laurent(), y, point) == expected


@given(rational_functions())
def test_invert_variable_is_involution(x):
    assert x.invert_variable().invert_variable() == x
    assert sympy.cancel(to_sympy(x.invert_variable()) - to_sympy(x).subs(LAM, 1 / LAM)) == 0


@given(rational_functions(), st.integers(-5, 5))
def test_shift_is_monomial_multiplication(x, k):
    assert x.shift(k) == x * LAMBDA**k


@given(rational_functions())
def test_json_round_trip(x):
    assert RationalFunction.from_json(json.loads(json.dumps(x.to_json()))) == x


@given(st.dictionaries(st.integers(-6, 6), st.fractions(max_denominator=5), max_size=5))
def test_laurent_round_trip(terms):
    p = LaurentPoly(terms)
    assert LaurentPoly.from_json(json.loads(json.dumps(p.to_json()))) == p
    assert RationalFunction.from_laurent(p).to_laurent() == p


def test_series_product_keeps_known_order():
    # a is exact through λ^4 and starts at λ^1, so b's unknown λ^4 tail only
    # matters from λ^5 on, while a's unknown λ^5 tail hits λ^5 as well
    a = BoundarySeries("zero", 4, {1: 1})
    b = BoundarySeries("zero", 3, {0: 1, 2: 2})
    prod = a * b
    assert prod.order == 4
    assert prod.coeffs == {1: 1, 3: 2}
