"""Rational functions of one variable over Q, kept in a canonical reduced form.

Canonical form of num/den:

* num and den are integer polynomials with gcd 1 over Q,
* their integer contents are coprime,
* the lowest-degree nonzero coefficient of den is positive,
* zero is 0/1.

Two rational functions are equal iff their canonical representations are.
"""

from fractions import Fraction
from math import gcd, lcm
from numbers import Rational

from ..errors import InvalidInputError, UndefinedValuationError
from . import _poly as P
from .laurent import LaurentPoly, format_terms, parse_rational

ZERO_POINT = "zero"
INFINITY_POINT = "infinity"
POINTS = (ZERO_POINT, INFINITY_POINT)


def check_point(point: str) -> str:
    if point not in POINTS:
        raise InvalidInputError(f"boundary point must be 'zero' or 'infinity', got {point!r}")
    return point


def _canonical(num, den):
    if not den:
        raise InvalidInputError("zero denominator")
    if not num:
        return P.ZERO, P.ONE
    g = P.gcd_poly(num, den)
    if g != P.ONE:
        num = P.exact_div(num, g)
        den = P.exact_div(den, g)
    if den[P.low_degree(den)] < 0:
        num, den = P.neg(num), P.neg(den)
    return num, den


def _clear(terms: dict):
    """Laurent {exp: rational} -> (integer poly, power of λ, integer scale) with
    terms == poly * λ^shift / scale."""
    if not terms:
        return P.ZERO, 0, 1
    lo = min(terms)
    hi = max(terms)
    scale = 1
    for c in terms.values():
        if isinstance(c, Fraction):
            scale = lcm(scale, c.denominator)
    coeffs = [0] * (hi - lo + 1)
    for e, c in terms.items():
        coeffs[e - lo] = int(c * scale)
    return tuple(coeffs), lo, scale


class RationalFunction:
    """An element of Q(λ).

    >>> x = RationalFunction.from_laurent({0: 1}) / RationalFunction.from_laurent({0: 1, 1: -1})
    >>> str(x)
    '1/(1 - λ)'
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=P.ZERO, den=P.ONE, *, _reduced=False):
        num = P.strip(int(a) for a in num)
        den = P.strip(int(a) for a in den)
        if not _reduced:
            num, den = _canonical(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _from_parts(cls, num, den):
        num, den = _canonical(num, den)
        return cls._make(num, den)

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls):
        return cls._make(P.ZERO, P.ONE)

    @classmethod
    def one(cls):
        return cls._make(P.ONE, P.ONE)

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        c = Fraction(c)
        if not c:
            return cls.zero()
        return cls._make((c.numerator,), (c.denominator,))

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "RationalFunction":
        """coeff * λ^exp."""
        c = Fraction(coeff)
        if not c:
            return cls.zero()
        if exp >= 0:
            return cls._make(P.shift((c.numerator,), exp), (c.denominator,))
        return cls._make((c.numerator,), P.shift((c.denominator,), -exp))

    @classmethod
    def from_laurent(cls, lp) -> "RationalFunction":
        terms = lp.terms if isinstance(lp, LaurentPoly) else dict(lp)
        terms = {e: c for e, c in terms.items() if c}
        poly, lo, scale = _clear(terms)
        if not poly:
            return cls.zero()
        # poly is divisible by no power of λ here (its lowest coefficient is nonzero)
        if lo >= 0:
            num, den = P.shift(poly, lo), (scale,)
        else:
            num, den = poly, P.shift((scale,), -lo)
        g = gcd(P.content(num), scale)
        if g > 1:
            num = tuple(a // g for a in num)
            den = tuple(a // g for a in den)
        return cls._make(num, den)

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, LaurentPoly):
            return cls.from_laurent(x)
        if isinstance(x, Rational):
            return cls.constant(x)
        raise TypeError(f"cannot interpret {type(x).__name__} as a rational function")

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self) -> bool:
        """True when the denominator is c * λ^k, i.e. the value is a Laurent polynomial."""
        return P.is_monomial(self.den)

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        k = len(self.den) - 1
        d = self.den[-1]
        return LaurentPoly._raw({i - k: _q(a, d) for i, a in enumerate(self.num) if a})

    # -- equality -----------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            try:
                other = RationalFunction.coerce(other)
            except TypeError:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            return RationalFunction._from_parts(P.add(a, c), b)
        if P.is_monomial(b) and P.is_monomial(d):
            # Laurent fast path: common denominator is a monomial
            kb, kd = len(b) - 1, len(d) - 1
            k = max(kb, kd)
            cb, cd = b[-1], d[-1]
            m = lcm(cb, cd)
            num = P.add(P.shift(P.scale(a, m // cb), k - kb), P.shift(P.scale(c, m // cd), k - kd))
            return RationalFunction._from_parts(num, P.shift((m,), k))
        g = P.gcd_poly(b, d)
        if g == P.ONE:
            return RationalFunction._from_parts(P.add(P.mul(a, d), P.mul(c, b)), P.mul(b, d))
        bg = P.exact_div(b, g)
        dg = P.exact_div(d, g)
        return RationalFunction._from_parts(P.add(P.mul(a, dg), P.mul(c, bg)), P.mul(b, dg))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._make(P.neg(self.num), self.den)

    def __sub__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not other.num:
            return RationalFunction.zero()
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = P.gcd_poly(a, d)
        g2 = P.gcd_poly(c, b)
        if g1 != P.ONE:
            a, d = P.exact_div(a, g1), P.exact_div(d, g1)
        if g2 != P.ONE:
            c, b = P.exact_div(c, g2), P.exact_div(b, g2)
        num, den = P.mul(a, c), P.mul(b, d)
        if den[P.low_degree(den)] < 0:
            num, den = P.neg(num), P.neg(den)
        return RationalFunction._make(num, den)

    __rmul__ = __mul__

    def invert(self) -> "RationalFunction":
        if not self.num:
            raise InvalidInputError("division by the zero function")
        num, den = self.den, self.num
        if den[P.low_degree(den)] < 0:
            num, den = P.neg(num), P.neg(den)
        return RationalFunction._make(num, den)

    def __truediv__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.invert()

    def __pow__(self, e: int):
        if e < 0:
            return self.invert() ** (-e)
        # canonical form is preserved by powers
        num, den = P.pow_(self.num, e), P.pow_(self.den, e)
        return RationalFunction._make(num, den)

    def shift(self, k: int) -> "RationalFunction":
        """Multiply by λ^k."""
        if not k or not self.num:
            return self
        num, den = self.num, self.den
        if k > 0:
            v = min(k, P.low_degree(den))
            return RationalFunction._make(P.shift(num, k - v), den[v:])
        k = -k
        v = min(k, P.low_degree(num))
        return RationalFunction._make(num[v:], P.shift(den, k - v))

    def scale(self, c) -> "RationalFunction":
        return self * RationalFunction.constant(c)

    def invert_variable(self) -> "RationalFunction":
        """Substitute λ -> λ^{-1}."""
        if not self.num:
            return self
        dn, dd = len(self.num) - 1, len(self.den) - 1
        num = P.strip(reversed(self.num))
        den = P.strip(reversed(self.den))
        if dd >= dn:
            num = P.shift(num, dd - dn)
        else:
            den = P.shift(den, dn - dd)
        return RationalFunction._from_parts(num, den)

    def __call__(self, x):
        x = Fraction(x)
        d = P.evaluate(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return Fraction(P.evaluate(self.num, x)) / d

    # -- valuations ---------------------------------------------------
    def valuation(self, point: str) -> int:
        """Order of vanishing at ``point`` (negative for a pole)."""
        check_point(point)
        if not self.num:
            raise UndefinedValuationError("the zero function has no valuation")
        if point == ZERO_POINT:
            return P.low_degree(self.num) - P.low_degree(self.den)
        return P.degree(self.den) - P.degree(self.num)

    # -- serialisation ------------------------------------------------
    def to_json(self) -> dict:
        return {
            "num": [[str(a), i] for i, a in enumerate(self.num) if a],
            "den": [[str(a), i] for i, a in enumerate(self.den) if a],
        }

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        if not isinstance(data, dict) or set(data) != {"num", "den"}:
            raise InvalidInputError("rational function must be an object with 'num' and 'den'")
        try:
            num = LaurentPoly.from_json(data["num"])
            den = LaurentPoly.from_json(data["den"])
        except ValueError as exc:
            raise InvalidInputError(str(exc)) from exc
        if not den:
            raise InvalidInputError("zero denominator")
        return cls.from_laurent(num) / cls.from_laurent(den)

    def __str__(self):
        n = format_terms([(i, a) for i, a in enumerate(self.num) if a])
        if self.den == P.ONE:
            return n
        d = format_terms([(i, a) for i, a in enumerate(self.den) if a])
        if len([a for a in self.num if a]) > 1:
            n = f"({n})"
        if len([a for a in self.den if a]) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RationalFunction({self})"


def _q(a: int, d: int):
    if a % d == 0:
        return a // d
    return Fraction(a, d)


def rf_normalize(num, den) -> RationalFunction:
    """Canonical form of num/den.

    ``num`` and ``den`` may be LaurentPoly values, ``{exp: coeff}`` mappings
    (negative exponents allowed) or ascending integer coefficient sequences.
    """
    n = _as_rf(num)
    d = _as_rf(den)
    if d.is_zero():
        raise InvalidInputError("zero denominator")
    return n / d


def _as_rf(x) -> RationalFunction:
    if isinstance(x, (RationalFunction, LaurentPoly)) or isinstance(x, Rational):
        return RationalFunction.coerce(x)
    if isinstance(x, dict):
        return RationalFunction.from_laurent({int(e): parse_rational(c) if isinstance(c, str) else c
                                              for e, c in x.items()})
    return RationalFunction.from_laurent({i: c for i, c in enumerate(x)})


def rf_arith(op: str, x, y=None) -> RationalFunction:
    """Field operation ``op`` in {add, sub, mul, div, invert} on canonical values."""
    x = RationalFunction.coerce(x)
    if op == "invert":
        return x.invert()
    if y is None:
        raise InvalidInputError(f"operation {op!r} needs two operands")
    y = RationalFunction.coerce(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y.is_zero():
            raise InvalidInputError("division by the zero function")
        return x / y
    raise InvalidInputError(f"unknown operation {op!r}")


def valuation(x, point: str) -> int:
    return RationalFunction.coerce(x).valuation(point)


def difference_valuation(x, y, point: str):
    """valuation(x - y) computed without reducing the difference; None for x == y."""
    y = RationalFunction.coerce(y)
    check_point(point)
    if isinstance(x, LaurentPoly):
        num, den = _laurent_minus(x, y)
    else:
        x = RationalFunction.coerce(x)
        num = P.sub(P.mul(x.num, y.den), P.mul(y.num, x.den))
        den = P.mul(x.den, y.den)
    if not num:
        return None
    if point == ZERO_POINT:
        return P.low_degree(num) - P.low_degree(den)
    return P.degree(den) - P.degree(num)


def _laurent_minus(x: LaurentPoly, y: RationalFunction):
    # x - y over a common denominator, up to a nonzero constant factor
    poly, lo, scale = _clear({e: c for e, c in x.terms.items() if c})
    if not poly:
        return P.neg(y.num), y.den
    tail = P.scale(y.num, scale)
    if lo >= 0:
        return P.sub(P.mul(P.shift(poly, lo), y.den), tail), y.den
    return P.sub(P.mul(poly, y.den), P.shift(tail, -lo)), P.shift(y.den, -lo)
