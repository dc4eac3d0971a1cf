"""Exact arithmetic: rationals, Laurent polynomials, rational functions of the
torus parameter and their expansions at 0 and infinity."""

from fractions import Fraction as Rational

from .laurent import LaurentPoly, parse_rational
from .rational import (INFINITY_POINT, POINTS, ZERO_POINT, RationalFunction, difference_valuation,
                       rf_arith, rf_normalize, valuation)
from .series import BoundarySeries, Certificate, converges_to, expand

LAMBDA = RationalFunction.monomial(1)

__all__ = [
    "Rational", "LaurentPoly", "RationalFunction", "BoundarySeries", "Certificate",
    "rf_normalize", "rf_arith", "expand", "valuation", "difference_valuation", "converges_to",
    "parse_rational", "ZERO_POINT", "INFINITY_POINT", "POINTS", "LAMBDA",
]
