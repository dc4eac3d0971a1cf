"""Laurent polynomials in the torus parameter with rational coefficients."""

from fractions import Fraction
from numbers import Rational


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def parse_rational(text) -> Rational:
    """Parse a decimal or ``p/q`` string (or an int) into an exact rational."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational coefficient: {text!r}")
    if isinstance(text, int):
        return text
    if isinstance(text, str):
        return _norm(Fraction(text.strip()))
    raise ValueError(f"not a rational coefficient: {text!r}")


class LaurentPoly:
    """Finite sum of c_k * λ^k with k in Z and nonzero rational c_k.

    Immutable; coefficients are ints where possible and Fractions otherwise.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                if c:
                    k = int(k)
                    c = clean.get(k, 0) + c
                    if c:
                        clean[k] = _norm(c)
                    else:
                        clean.pop(k, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "LaurentPoly":
        return cls._raw({exp: _norm(coeff)} if coeff else {})

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls.monomial(0, c)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def __getitem__(self, exp: int):
        return self._terms.get(exp, 0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def valuation(self) -> int:
        """Lowest exponent; the zero polynomial has no valuation."""
        if not self._terms:
            raise ValueError("zero Laurent polynomial has no valuation")
        return min(self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero Laurent polynomial has no degree")
        return max(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, Rational):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, Rational):
            return LaurentPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(self._terms) < len(other._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for k, c in small.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({k: _norm(c * other) for k, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                k = i + j
                out[k] = out.get(k, 0) + a * b
        return LaurentPoly._raw({k: _norm(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (k, c), = self._terms.items()
            return LaurentPoly.monomial(-k * -e, Fraction(1, 1) / Fraction(c) ** -e)
        result = LaurentPoly.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by λ^k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute λ -> λ^{-1}."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def truncate(self, below: int) -> "LaurentPoly":
        """Keep only exponents strictly below ``below``."""
        return LaurentPoly._raw({e: c for e, c in self._terms.items() if e < below})

    def __call__(self, x):
        if x == 0 and self._terms and min(self._terms) < 0:
            raise ZeroDivisionError("pole at zero")
        return sum((Fraction(c) * Fraction(x) ** e for e, c in self._terms.items()), Fraction(0))

    def to_json(self) -> list:
        return [[str(c), e] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        if not isinstance(data, list):
            raise ValueError("Laurent polynomial must be a list of [coef, exp] pairs")
        terms = {}
        for pair in data:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise ValueError(f"bad term {pair!r}")
            coef, exp = pair
            if isinstance(exp, bool) or not isinstance(exp, int):
                raise ValueError(f"exponent must be an integer: {exp!r}")
            terms[exp] = terms.get(exp, 0) + parse_rational(coef)
        return cls(terms)

    def __str__(self):
        return format_terms(sorted(self._terms.items()))

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"


def format_terms(items, var="λ") -> str:
    """Render sorted (exp, coeff) pairs as ``1 - 2λ + λ^2``."""
    if not items:
        return "0"
    parts = []
    for i, (e, c) in enumerate(items):
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if e == 0:
            body = str(mag)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if mag == 1 else f"{mag}{power}"
        if i == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)
