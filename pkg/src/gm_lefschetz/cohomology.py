"""Characters of G_m on the cohomology of equivariant line bundles on P^N.

Conventions: the coordinate x_j has trace λ^(-a_j), and O(l) ⊗ λ^c carries the
linearization induced from V twisted by the character λ^c. A section x^m of
O(l) (m >= 0, |m| = l) therefore has trace λ^(c - sum m_j a_j); the top
cohomology has the Laurent monomials with every m_j <= -1 as a basis.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InvalidInputError
from .exactnum import LaurentPoly, RationalFunction
from .k0ring import euler_char
from .torusaction import LinearAction


class VirtualBundle:
    """A formal sum of mult * O(l) ⊗ λ^c; the admissible coefficient sheaves.

    Terms are kept combined and sorted, so equal bundles compare equal.

    >>> VirtualBundle([(1, 0, 1), (1, 0, 2), (0, 0, -1)]).terms
    ((0, 0, -1), (1, 0, 3))
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc = {}
        for term in terms:
            try:
                l, c, mult = term
            except (TypeError, ValueError) as exc:
                raise InvalidInputError(f"bundle term must be (l, c, mult), got {term!r}") from exc
            for v in (l, c, mult):
                if isinstance(v, bool) or not isinstance(v, int):
                    raise InvalidInputError(f"bundle entries must be integers, got {term!r}")
            acc[(l, c)] = acc.get((l, c), 0) + mult
        self.terms = tuple(sorted((l, c, m) for (l, c), m in acc.items() if m))

    @classmethod
    def line(cls, l: int, c: int = 0, mult: int = 1) -> "VirtualBundle":
        return cls([(l, c, mult)])

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, VirtualBundle) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __add__(self, other):
        return VirtualBundle(self.terms + other.terms)

    def __neg__(self):
        return VirtualBundle((l, c, -m) for l, c, m in self.terms)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        return VirtualBundle((l, c, m * k) for l, c, m in self.terms)

    __rmul__ = __mul__

    def twist(self, d: int) -> "VirtualBundle":
        """Tensor with O(d)."""
        return VirtualBundle((l + d, c, m) for l, c, m in self.terms)

    def shift(self, c0: int) -> "VirtualBundle":
        """Tensor with the character λ^c0."""
        return VirtualBundle((l, c + c0, m) for l, c, m in self.terms)

    def rank(self) -> int:
        return sum(m for _, _, m in self.terms)

    def determinant(self) -> tuple:
        """(twist, character) of the determinant line of the virtual bundle."""
        return (sum(l * m for l, _, m in self.terms), sum(c * m for _, c, m in self.terms))

    def to_json(self) -> list:
        return [{"l": l, "c": c, "mult": m} for l, c, m in self.terms]

    @classmethod
    def from_json(cls, data) -> "VirtualBundle":
        if not isinstance(data, list):
            raise InvalidInputError("bundle must be a list of {l, c, mult} objects")
        terms = []
        for i, item in enumerate(data):
            if not isinstance(item, dict) or "l" not in item:
                raise InvalidInputError(f"bundle[{i}] must be an object with at least 'l'")
            unknown = set(item) - {"l", "c", "mult"}
            if unknown:
                raise InvalidInputError(f"bundle[{i}] has unknown keys {sorted(unknown)}")
            terms.append((item["l"], item.get("c", 0), item.get("mult", 1)))
        return cls(terms)

    def __repr__(self):
        return f"VirtualBundle({list(self.terms)!r})"


@dataclass(frozen=True)
class CohomologyCharacter:
    """Traces of λ on H^i, one Laurent polynomial per nonzero degree."""

    per_degree: dict = field(default_factory=dict)
    stabilized: bool | None = None

    def __post_init__(self):
        object.__setattr__(self, "per_degree", {i: p for i, p in self.per_degree.items() if p})

    def __getitem__(self, i: int) -> LaurentPoly:
        return self.per_degree.get(i, LaurentPoly())

    def euler(self) -> LaurentPoly:
        total = LaurentPoly()
        for i, p in self.per_degree.items():
            total = total + (p if i % 2 == 0 else -p)
        return total

    def shift(self, c: int) -> "CohomologyCharacter":
        return CohomologyCharacter({i: p.shift(c) for i, p in self.per_degree.items()},
                                   self.stabilized)

    def same_groups(self, other) -> bool:
        return self.per_degree == other.per_degree

    def to_json(self, n: int) -> dict:
        out = {"h": {str(i): self[i].to_json() for i in range(n + 1)}}
        if self.stabilized is not None:
            out["stabilized"] = self.stabilized
        return out


def _monomial_weights(weights, total: int) -> dict:
    """{sum m_j a_j: count} over m >= 0 with sum m_j = total."""
    dist = {(0, 0): 1}  # (partial degree, weight) -> count
    for a in weights:
        nxt = {}
        for (deg, w), cnt in dist.items():
            for k in range(total - deg + 1):
                key = (deg + k, w + k * a)
                nxt[key] = nxt.get(key, 0) + cnt
        dist = nxt
    out = {}
    for (deg, w), cnt in dist.items():
        if deg == total:
            out[w] = out.get(w, 0) + cnt
    return out


@lru_cache(maxsize=8192)
def _h_character_unit(weights: tuple, l: int) -> tuple:
    n = len(weights) - 1
    top = {}
    if l >= 0:
        h0 = {-w: cnt for w, cnt in _monomial_weights(weights, l).items()}
        top[0] = LaurentPoly(h0)
    # top degree: m_j = -1 - k_j with k >= 0 and sum k_j = -l - n - 1
    rest = -l - n - 1
    if rest >= 0:
        base = -sum(weights)  # sum m_j a_j at k = 0
        hn = {}
        for w, cnt in _monomial_weights(weights, rest).items():
            e = -(base - w)
            hn[e] = hn.get(e, 0) + cnt
        top[n] = top.get(n, LaurentPoly()) + LaurentPoly(hn)
    return tuple(sorted(top.items()))


def h_character(action: LinearAction, l: int, c: int = 0) -> CohomologyCharacter:
    """Characters of H^i(P^N, O(l) ⊗ λ^c); only degrees 0 and N can be nonzero."""
    unit = _h_character_unit(action.weights, l)
    return CohomologyCharacter({i: p.shift(c) for i, p in unit})


def lefschetz_direct(action: LinearAction, bundle: VirtualBundle) -> RationalFunction:
    """sum_i (-1)^i Tr(λ | H^i), extended linearly over the bundle's terms."""
    total = LaurentPoly()
    for l, c, mult in bundle:
        total = total + h_character(action, l, c).euler() * mult
    return RationalFunction.from_laurent(total)


def tangent_virtual_bundle(action: LinearAction) -> VirtualBundle:
    """[T] = sum_j [O(1) ⊗ λ^(a_j)] - [O], from the equivariant Euler sequence."""
    return VirtualBundle([(1, a, 1) for a in action.weights] + [(0, 0, -1)])


def euler_sequence(action: LinearAction, twist: int = 0) -> list:
    """The three terms of 0 -> O -> ⊕ O(1) ⊗ λ^(a_j) -> T -> 0, tensored with O(twist)."""
    middle = VirtualBundle([(1, a, 1) for a in action.weights])
    return [VirtualBundle.line(0).twist(twist), middle.twist(twist),
            tangent_virtual_bundle(action).twist(twist)]


def euler_char_check(action: LinearAction, l: int) -> bool:
    """Lefschetz number of O(l) at λ = 1 equals χ(P^N, O(l))."""
    return lefschetz_direct(action, VirtualBundle.line(l))(1) == euler_char(action.n, l)
