"""Fixed-point side of the Lefschetz formula.

Each fixed component Z ≅ P^m contributes χ_L(F|_Z ⊗ NL), where NL is the
inverse of sum_i (-1)^i [∧^i N*] in K_0(Z) ⊗ Q(λ). The fiber of O(l) ⊗ λ^c over
the component of weight a carries the character λ^(c - l a).
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .cohomology import VirtualBundle
from .errors import NotApplicableError, NotInvertibleError
from .exactnum import RationalFunction
from .k0ring import EquivLine, K0Element, chi_L, embed_line, exterior_alternating_sum, k0_invert
from .torusaction import FixedComponent, LinearAction, fixed_locus

_ONE = RationalFunction.one()


@dataclass(frozen=True)
class ComponentContribution:
    component: FixedComponent
    value: RationalFunction

    def to_json(self) -> dict:
        return {"component": self.component.to_json(), "value": self.value.to_json()}


class Localization(NamedTuple):
    total: RationalFunction
    parts: tuple

    def to_json(self) -> dict:
        return {"total": self.total.to_json(), "parts": [p.to_json() for p in self.parts]}


def conormal_lines(lines) -> tuple:
    return tuple(EquivLine(x.degree, x.character, x.mult) for x in lines)


def fiber_character(term, comp: FixedComponent) -> int:
    l, c = term[0], term[1]
    return c - l * comp.weight


def restrict_bundle(term, comp: FixedComponent) -> K0Element:
    """[O(l) ⊗ λ^c] restricted to ``comp``: [O_{P^m}(l)] ⊗ λ^(c - l a)."""
    l = term[0]
    return embed_line(l, fiber_character(term, comp), comp.dim)


@lru_cache(maxsize=4096)
def nl_factor(comp: FixedComponent) -> K0Element:
    """(sum_i (-1)^i [∧^i N*])^{-1} on the component."""
    if any(line.character == 0 for line in comp.conormal):
        raise NotInvertibleError("conormal character 0: not a genuine fixed component")
    return k0_invert(exterior_alternating_sum(conormal_lines(comp.conormal), comp.dim))


@lru_cache(maxsize=16384)
def _unit_contribution(comp: FixedComponent, l: int) -> RationalFunction:
    # χ_L([O(l)] ⊗ NL) with the fiber character stripped off
    return chi_L(embed_line(l, 0, comp.dim) * nl_factor(comp))


def component_value(comp: FixedComponent, bundle: VirtualBundle) -> RationalFunction:
    total = RationalFunction.zero()
    for l, c, mult in bundle:
        unit = _unit_contribution(comp, l).shift(fiber_character((l, c), comp))
        total = total + (unit if mult == 1 else unit.scale(mult))
    return total


def localize(action: LinearAction, bundle: VirtualBundle) -> Localization:
    """Sum of the component contributions; the parts are returned in component order."""
    parts = tuple(ComponentContribution(comp, component_value(comp, bundle))
                  for comp in fixed_locus(action))
    total = RationalFunction.zero()
    for part in parts:
        total = total + part.value
    return Localization(total, parts)


def localize_points(action: LinearAction, bundle: VirtualBundle) -> RationalFunction:
    """Isolated fixed points: sum_j Tr(F_j) / prod_{i != j} (1 - λ^(a_j - a_i))."""
    weights = action.weights
    if len(set(weights)) != len(weights):
        raise NotApplicableError("repeated weights give positive-dimensional fixed components; "
                                 "use localize")
    total = RationalFunction.zero()
    for j, aj in enumerate(weights):
        fiber = RationalFunction.zero()
        for l, c, mult in bundle:
            fiber = fiber + RationalFunction.monomial(c - l * aj, mult)
        den = _ONE
        for i, ai in enumerate(weights):
            if i != j:
                den = den * (_ONE - RationalFunction.monomial(aj - ai))
        total = total + fiber / den
    return total
