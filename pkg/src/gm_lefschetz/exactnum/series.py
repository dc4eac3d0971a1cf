"""Truncated expansions at the two boundary points of the compactified torus,
and finite-prefix convergence certificates.

At ``zero`` a series is in powers of λ; at ``infinity`` in powers of λ^{-1}.
Exponents in ``coeffs`` always refer to the local variable of the point.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import _poly as P
from .laurent import LaurentPoly
from .rational import (INFINITY_POINT, ZERO_POINT, RationalFunction, check_point,
                       difference_valuation)


@dataclass(frozen=True)
class BoundarySeries:
    point: str
    order: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        check_point(self.point)
        object.__setattr__(self, "coeffs", {e: c for e, c in self.coeffs.items() if c})
        if any(e > self.order for e in self.coeffs):
            raise ValueError("series coefficient beyond truncation order")

    def __getitem__(self, exp):
        return self.coeffs.get(exp, 0)

    def valuation(self):
        """Lowest retained exponent, or None if every coefficient up to ``order`` vanishes."""
        return min(self.coeffs) if self.coeffs else None

    def truncate(self, order: int) -> "BoundarySeries":
        order = min(order, self.order)
        return BoundarySeries(self.point, order, {e: c for e, c in self.coeffs.items() if e <= order})

    def __mul__(self, other: "BoundarySeries") -> "BoundarySeries":
        """Product, correct up to the order both factors determine."""
        if self.point != other.point:
            raise ValueError("cannot multiply series at different points")
        if not self.coeffs or not other.coeffs:
            return BoundarySeries(self.point, min(self.order, other.order), {})
        # a coefficient of the product at exponent e needs every factor term up to
        # e - (other factor's valuation)
        order = min(self.order + other.valuation(), other.order + self.valuation())
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                if i + j <= order:
                    out[i + j] = out.get(i + j, 0) + a * b
        return BoundarySeries(self.point, order, out)

    def __add__(self, other: "BoundarySeries") -> "BoundarySeries":
        if self.point != other.point:
            raise ValueError("cannot add series at different points")
        order = min(self.order, other.order)
        out = {e: c for e, c in self.coeffs.items() if e <= order}
        for e, c in other.coeffs.items():
            if e <= order:
                out[e] = out.get(e, 0) + c
        return BoundarySeries(self.point, order, out)

    def to_laurent(self) -> LaurentPoly:
        """The retained terms as a Laurent polynomial in λ."""
        sign = 1 if self.point == ZERO_POINT else -1
        return LaurentPoly({sign * e: c for e, c in self.coeffs.items()})

    def to_json(self) -> dict:
        return {
            "point": self.point,
            "order": self.order,
            "coeffs": [[str(c), e] for e, c in sorted(self.coeffs.items())],
        }


def _power_series_quotient(num, den, count):
    """First ``count`` coefficients of num/den as a power series; den[0] != 0."""
    inv0 = Fraction(1, den[0]) if abs(den[0]) != 1 else den[0]
    out = []
    for n in range(count):
        acc = num[n] if n < len(num) else 0
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        c = acc * inv0
        if isinstance(c, Fraction) and c.denominator == 1:
            c = c.numerator
        out.append(c)
    return out


def expand(x, point: str, order: int) -> BoundarySeries:
    """Laurent expansion of ``x`` at ``point`` keeping every exponent <= ``order``.

    >>> expand(RationalFunction.monomial(0) / (1 - RationalFunction.monomial(1)), "zero", 3).coeffs
    {0: 1, 1: 1, 2: 1, 3: 1}
    """
    check_point(point)
    x = RationalFunction.coerce(x)
    if x.is_zero():
        return BoundarySeries(point, order, {})
    num, den = x.num, x.den
    if point == INFINITY_POINT:
        # x(λ) = μ^{deg den - deg num} rev(num)(μ) / rev(den)(μ) with μ = 1/λ
        num, den = P.strip(reversed(num)), P.strip(reversed(den))
        lead = (len(x.den) - 1) - (len(x.num) - 1)
    else:
        lead = 0
    vn, vd = P.low_degree(num), P.low_degree(den)
    num, den = num[vn:], den[vd:]
    start = lead + vn - vd
    count = order - start + 1
    if count <= 0:
        return BoundarySeries(point, order, {})
    coeffs = _power_series_quotient(num, den, count)
    return BoundarySeries(point, order, {start + i: c for i, c in enumerate(coeffs) if c})


@dataclass(frozen=True)
class Certificate:
    """Finite-prefix evidence that partial sums approach a limit at a boundary point.

    ``valuations[n]`` is the valuation of ``partials[n] - limit`` (None when the
    difference is exactly zero, i.e. +infinity). The certificate passes when
    ``valuations[n] > n + offset`` for every n; ``offset`` is the a priori
    constant by which the terms' orders may lag the index.
    """

    point: str
    valuations: tuple
    offset: int
    status: str
    failed_index: int | None
    strictly_increasing: bool

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def margin(self):
        """valuation - (index + offset) at the final index; None means +infinity."""
        last = self.valuations[-1]
        if last is None:
            return None
        return last - (len(self.valuations) - 1 + self.offset)

    def shift(self, k: int) -> "Certificate":
        """The certificate for the same sequences multiplied by λ^k."""
        d = k if self.point == ZERO_POINT else -k
        return Certificate(self.point, tuple(None if v is None else v + d for v in self.valuations),
                           self.offset + d, self.status, self.failed_index,
                           self.strictly_increasing)

    def to_json(self) -> dict:
        return {
            "point": self.point,
            "valuations": list(self.valuations),
            "offset": self.offset,
            "margin": self.margin,
            "strictly_increasing": self.strictly_increasing,
            "status": self.status,
            "failed_index": self.failed_index,
        }


def _increasing(vals) -> bool:
    for a, b in zip(vals, vals[1:]):
        if a is None:
            if b is not None:
                return False
        elif b is not None and b <= a:
            return False
    return True


def converges_to(partials, limit, point: str, offset: int = 0) -> Certificate:
    """Certify that ``partials`` converge to ``limit`` at ``point``.

    ``partials`` may hold RationalFunction or LaurentPoly values. Each
    difference ``partials[n] - limit`` must have valuation above
    ``n + offset``; an exact match counts as valuation +infinity.
    """
    check_point(point)
    if not partials:
        raise ValueError("need at least one partial sum")
    limit = RationalFunction.coerce(limit)
    vals = tuple(difference_valuation(s, limit, point) for s in partials)
    failed = None
    for n, v in enumerate(vals):
        if v is not None and v <= n + offset:
            failed = n
            break
    return Certificate(
        point=point,
        valuations=vals,
        offset=offset,
        status="pass" if failed is None else "fail",
        failed_index=failed,
        strictly_increasing=_increasing(vals),
    )
