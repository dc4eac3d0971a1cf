"""K_0(P^m) with coefficients in Q(λ).

Elements are written sum_j c_j η^j with η = [O(-1)] - 1, which satisfies
η^(m+1) = 0. The augmentation c_0 is the rank-with-character of the class;
everything of positive η-degree is nilpotent, so a class is a unit exactly
when c_0 != 0 and the inverse is a finite geometric series.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .errors import InvalidInputError, NotInvertibleError
from .exactnum import LaurentPoly, RationalFunction

_ZERO = RationalFunction.zero()
_ONE = RationalFunction.one()


@dataclass(frozen=True)
class EquivLine:
    """The line bundle O(degree) twisted by the character λ^character, ``mult`` times."""

    degree: int
    character: int
    mult: int = 1

    def __post_init__(self):
        if self.mult < 1:
            raise InvalidInputError(f"multiplicity must be positive, got {self.mult}")


@dataclass(frozen=True)
class K0Element:
    base_dim: int
    coeffs: tuple

    def __post_init__(self):
        if self.base_dim < 0:
            raise InvalidInputError("base dimension must be non-negative")
        coeffs = tuple(RationalFunction.coerce(c) for c in self.coeffs)
        if len(coeffs) != self.base_dim + 1:
            raise InvalidInputError(
                f"need {self.base_dim + 1} coefficients on P^{self.base_dim}, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def _raw(cls, m, coeffs):
        obj = object.__new__(cls)
        object.__setattr__(obj, "base_dim", m)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def zero(cls, m: int) -> "K0Element":
        return cls._raw(m, (_ZERO,) * (m + 1))

    @classmethod
    def one(cls, m: int) -> "K0Element":
        return cls.scalar(m, _ONE)

    @classmethod
    def scalar(cls, m: int, value) -> "K0Element":
        return cls._raw(m, (RationalFunction.coerce(value),) + (_ZERO,) * m)

    @classmethod
    def eta(cls, m: int) -> "K0Element":
        coeffs = [_ZERO] * (m + 1)
        if m >= 1:
            coeffs[1] = _ONE
        return cls._raw(m, coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def _check(self, other):
        if not isinstance(other, K0Element):
            raise InvalidInputError("expected a K0Element")
        if other.base_dim != self.base_dim:
            raise InvalidInputError(
                f"base dimensions differ: P^{self.base_dim} vs P^{other.base_dim}")

    def __add__(self, other):
        self._check(other)
        return K0Element._raw(self.base_dim, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return K0Element._raw(self.base_dim, (-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, K0Element):
            value = RationalFunction.coerce(other)
            return K0Element._raw(self.base_dim, (a * value for a in self.coeffs))
        self._check(other)
        m = self.base_dim
        out = [_ZERO] * (m + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(m + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return K0Element._raw(m, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return k0_invert(self) ** (-e)
        result = K0Element.one(self.base_dim)
        for _ in range(e):
            result = result * self
        return result

    def to_json(self) -> dict:
        return {"base_dim": self.base_dim, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data) -> "K0Element":
        try:
            return cls(int(data["base_dim"]),
                       tuple(RationalFunction.from_json(c) for c in data["coeffs"]))
        except (KeyError, TypeError) as exc:
            raise InvalidInputError(f"malformed K0 element: {exc}") from exc


def _binom(top: int, j: int) -> int:
    # generalised binomial coefficient, top may be negative
    num = 1
    for i in range(j):
        num *= top - i
    return num // factorial(j)


def line_class(degree: int, m: int) -> tuple:
    """Integer η-coordinates of [O(degree)] = (1 + η)^(-degree) on P^m."""
    return tuple(_binom(-degree, j) for j in range(m + 1))


def embed_line(degree: int, character: int, m: int) -> K0Element:
    """The class of O(degree) ⊗ λ^character on P^m."""
    lam = RationalFunction.monomial(character)
    return K0Element._raw(m, (lam.scale(c) if c else _ZERO for c in line_class(degree, m)))


def k0_arith(op: str, x: K0Element, y: K0Element) -> K0Element:
    if op == "add":
        return x + y
    if op == "mul":
        x._check(y)
        return x * y
    raise InvalidInputError(f"unknown K0 operation {op!r}")


def k0_rank_char(x: K0Element) -> RationalFunction:
    return x.coeffs[0]


def k0_invert(x: K0Element) -> K0Element:
    """Inverse via r^{-1} sum_i (-n/r)^i, with r the rank part and n the nilpotent part."""
    r = k0_rank_char(x)
    if r.is_zero():
        raise NotInvertibleError("rank character is zero; the class is not a unit")
    m = x.base_dim
    r_inv = r.invert()
    step = K0Element._raw(m, (_ZERO,) + tuple(-c * r_inv for c in x.coeffs[1:]))
    total = K0Element.one(m)
    power = K0Element.one(m)
    for _ in range(m):
        power = power * step
        total = total + power
    return total * r_inv


def euler_char(m: int, d: int) -> int:
    """χ(P^m, O(d)) = prod_{k=1}^{m} (d + k) / k."""
    if m < 0:
        raise InvalidInputError("dimension must be non-negative")
    num = 1
    for k in range(1, m + 1):
        num *= d + k
    return num // factorial(m)


@lru_cache(maxsize=None)
def eta_euler_chars(m: int) -> tuple:
    """χ(P^m, η^j) for j = 0..m, through η^j = sum_i (-1)^(j-i) C(j,i) [O(-i)]."""
    return tuple(sum((-1) ** (j - i) * comb(j, i) * euler_char(m, -i) for i in range(j + 1))
                 for j in range(m + 1))


def chi_L(x: K0Element) -> RationalFunction:
    """Lefschetz number of a class on P^m with trivial action on the base."""
    total = _ZERO
    for c, chi in zip(x.coeffs, eta_euler_chars(x.base_dim)):
        if chi and not c.is_zero():
            total = total + (c if chi == 1 else c.scale(chi))
    return total


def laurent_coeffs(x: K0Element):
    """The η-coordinates of ``x`` as LaurentPoly values, or None if some are not Laurent."""
    if not all(c.is_laurent() for c in x.coeffs):
        return None
    return tuple(c.to_laurent() for c in x.coeffs)


def laurent_product(a: tuple, b: tuple) -> tuple:
    """Product in K_0(P^m) on Laurent η-coordinates (m + 1 = len(a))."""
    m = len(a) - 1
    out = [LaurentPoly()] * (m + 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(m + 1 - i):
            if b[j]:
                out[i + j] = out[i + j] + x * b[j]
    return tuple(out)


def chi_L_pairing(a: tuple, b: tuple) -> LaurentPoly:
    """χ_L(a·b) for Laurent η-coordinates, without forming the product."""
    chis = eta_euler_chars(len(a) - 1)
    total = LaurentPoly()
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(len(a) - i):
            if b[j] and chis[i + j]:
                total = total + x * b[j] * chis[i + j]
    return total


def _expanded(lines):
    for line in lines:
        for _ in range(line.mult):
            yield line


def exterior_powers(lines, base_dim: int) -> list:
    """[∧^i E] for i = 0..rank E, E the direct sum of ``lines``."""
    out = [K0Element.one(base_dim)]
    for line in _expanded(lines):
        cls = embed_line(line.degree, line.character, base_dim)
        out = [out[i] + out[i - 1] * cls if i else out[0] for i in range(len(out))] + [out[-1] * cls]
    return out


def exterior_alternating_sum(lines, base_dim: int) -> K0Element:
    """sum_i (-1)^i [∧^i E]."""
    total = K0Element.zero(base_dim)
    for i, wedge in enumerate(exterior_powers(lines, base_dim)):
        total = total + wedge if i % 2 == 0 else total - wedge
    return total


def symmetric_power_series(lines, base_dim: int, p_max: int) -> list:
    """[Sym^p E] for p = 0..p_max."""
    if p_max < 0:
        raise InvalidInputError("symmetric power degree must be non-negative")
    out = [K0Element.one(base_dim)] + [K0Element.zero(base_dim)] * p_max
    for line in _expanded(lines):
        cls = embed_line(line.degree, line.character, base_dim)
        # multiply the generating series by 1/(1 - [L] t)
        for p in range(1, p_max + 1):
            out[p] = out[p] + out[p - 1] * cls
    return out


def symmetric_power_sum(lines, base_dim: int, p: int) -> K0Element:
    """[Sym^p E] for E the direct sum of ``lines``."""
    if p < 0:
        raise InvalidInputError("symmetric power degree must be non-negative")
    return symmetric_power_series(lines, base_dim, p)[p]
