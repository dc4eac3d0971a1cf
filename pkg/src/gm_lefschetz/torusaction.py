"""Linear G_m-actions on P^N: fixed components and their conormal characters.

The action is given by integer weights (a_0, ..., a_N). Its fixed locus is one
coordinate subspace per distinct weight a. Seen from the component of weight a,
the coordinates of weight b span conormal directions on which λ acts by
λ^(a - b): positive characters point into the incoming cell (p-filtration),
negative ones into the outgoing cell (q-filtration).
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .errors import InvalidInputError


@dataclass(frozen=True)
class LinearAction:
    n: int
    weights: tuple

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 0:
            raise InvalidInputError(f"dimension must be a non-negative integer, got {self.n!r}")
        weights = tuple(self.weights)
        if any(isinstance(w, bool) or not isinstance(w, int) for w in weights):
            raise InvalidInputError("weights must be integers")
        if len(weights) != self.n + 1:
            raise InvalidInputError(
                f"weights length must be n+1 = {self.n + 1}, got {len(weights)}")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def of(cls, *weights) -> "LinearAction":
        return cls(len(weights) - 1, tuple(weights))

    def to_json(self) -> dict:
        return {"n": self.n, "weights": list(self.weights)}


@dataclass(frozen=True)
class ConormalLine:
    degree: int
    character: int
    mult: int

    def to_json(self) -> dict:
        return {"degree": self.degree, "character": self.character, "mult": self.mult}


@dataclass(frozen=True)
class FixedComponent:
    weight: int
    indices: tuple
    conormal: tuple

    @property
    def dim(self) -> int:
        return len(self.indices) - 1

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "indices": list(self.indices),
            "conormal": [line.to_json() for line in self.conormal],
        }

    @classmethod
    def from_json(cls, data) -> "FixedComponent":
        try:
            return cls(
                weight=int(data["weight"]),
                indices=tuple(int(i) for i in data["indices"]),
                conormal=tuple(ConormalLine(int(c["degree"]), int(c["character"]), int(c["mult"]))
                               for c in data["conormal"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInputError(f"malformed fixed component: {exc}") from exc


def fixed_locus(action: LinearAction) -> list:
    """Fixed components of ``action``, sorted by descending weight."""
    return list(_fixed_locus(action))


@lru_cache(maxsize=4096)
def _fixed_locus(action):
    counts = Counter(action.weights)
    comps = []
    for a in sorted(counts, reverse=True):
        indices = tuple(i for i, w in enumerate(action.weights) if w == a)
        degree = -1 if len(indices) > 1 else 0
        conormal = tuple(ConormalLine(degree, a - b, counts[b])
                         for b in sorted(counts, reverse=True) if b != a)
        comps.append(FixedComponent(a, indices, conormal))
    return tuple(comps)


class TangentSplit(NamedTuple):
    zero_dim: int
    plus: tuple
    minus: tuple


def _check_component(action: LinearAction, comp: FixedComponent):
    if comp not in _fixed_locus(action):
        raise InvalidInputError(f"component of weight {comp.weight} is not fixed by {action.weights}")


def tangent_split(action: LinearAction, comp: FixedComponent) -> TangentSplit:
    """Split the conormal data of ``comp`` by the sign of the character."""
    _check_component(action, comp)
    plus = tuple(line for line in comp.conormal if line.character > 0)
    minus = tuple(line for line in comp.conormal if line.character < 0)
    return TangentSplit(comp.dim, plus, minus)


class Hyperbolicity(NamedTuple):
    purely_nonhyperbolic: bool
    witness: FixedComponent | None

    def __bool__(self):
        return self.purely_nonhyperbolic


def is_purely_nonhyperbolic(action: LinearAction) -> Hyperbolicity:
    """Whether every fixed component flows one way only.

    On failure the first component (in descending weight order) with both
    incoming and outgoing directions is returned as the witness.
    """
    for comp in _fixed_locus(action):
        split = tangent_split(action, comp)
        if split.plus and split.minus:
            return Hyperbolicity(False, comp)
    return Hyperbolicity(True, None)
