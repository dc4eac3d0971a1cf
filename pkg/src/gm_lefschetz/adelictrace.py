"""Fixed-part traces through the bifiltration by incoming and outgoing ideals.

Around a fixed component Z the conormal bundle splits as N*₊ ⊕ N*₋ by the
sign of the character. The graded pieces of the bifiltration have traces

    tr_{p,q} = χ_L(F|_Z ⊗ Sym^p N*₊ ⊗ Sym^q N*₋),

Laurent polynomials in λ. Summing over q converges at λ = ∞ (the minus
characters are negative), and the resulting Tr_p summed over p converges at
λ = 0. The limit is χ_L(F|_Z ⊗ NL₊ ⊗ NL₋), which is the localization total.

Certificates use the a priori offsets below: for every n the n-th difference
must have valuation above n + offset.
"""

from dataclasses import dataclass
from functools import lru_cache

from .cohomology import VirtualBundle
from .errors import InvalidInputError, NotApplicableError
from .exactnum import (INFINITY_POINT, ZERO_POINT, LaurentPoly, RationalFunction, converges_to)
from .k0ring import (EquivLine, K0Element, chi_L, chi_L_pairing, embed_line, exterior_alternating_sum,
                     k0_invert, laurent_coeffs, symmetric_power_series)
from .localization import fiber_character, localize
from .torusaction import FixedComponent, LinearAction, fixed_locus, is_purely_nonhyperbolic, tangent_split

_ONE = RationalFunction.one()


def local_ring_trace(cotangent_chars, c: int = 0) -> RationalFunction:
    """Trace on the completed local ring at a fixed point: λ^c prod_w 1/(1 - λ^w)."""
    value = RationalFunction.monomial(c)
    for w in cotangent_chars:
        if isinstance(w, bool) or not isinstance(w, int):
            raise InvalidInputError(f"characters must be integers, got {w!r}")
        if w == 0:
            raise InvalidInputError("a zero cotangent character has no convergent trace")
        value = value / (_ONE - RationalFunction.monomial(w))
    return value


def _lines(conormal) -> tuple:
    return tuple(EquivLine(x.degree, x.character, x.mult) for x in conormal)


def _sides(comp: FixedComponent):
    plus = tuple(x for x in comp.conormal if x.character > 0)
    minus = tuple(x for x in comp.conormal if x.character < 0)
    return plus, minus


@lru_cache(maxsize=8192)
def _sym_series(lines: tuple, m: int, top: int) -> tuple:
    return tuple(symmetric_power_series(lines, m, top))


@lru_cache(maxsize=8192)
def _nl(lines: tuple, m: int) -> K0Element:
    return k0_invert(exterior_alternating_sum(lines, m))


def _check_order(name: str, value) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidInputError(f"{name} must be a non-negative integer, got {value!r}")


def trace_pq(action: LinearAction, bundle: VirtualBundle, comp: FixedComponent,
             p: int, q: int) -> LaurentPoly:
    """χ_L(F|_Z ⊗ Sym^p N*₊ ⊗ Sym^q N*₋) on the component ``comp``."""
    _check_order("p", p)
    _check_order("q", q)
    split = tangent_split(action, comp)
    m = comp.dim
    sym = (_sym_series(_lines(split.plus), m, p)[p]
           * _sym_series(_lines(split.minus), m, q)[q])
    total = LaurentPoly()
    for l, c, mult in bundle:
        value = chi_L(embed_line(l, fiber_character((l, c), comp), m) * sym)
        total = total + value.to_laurent() * mult
    return total


@lru_cache(maxsize=16384)
def _unit_tables(comp: FixedComponent, l: int, p_max: int, q_max: int):
    # everything for O(l) with the fiber character stripped off
    m = comp.dim
    plus, minus = _sides(comp)
    plus, minus = _lines(plus), _lines(minus)
    base = embed_line(l, 0, m)
    sym_plus = _sym_series(plus, m, p_max)
    sym_minus = _sym_series(minus, m, q_max)
    nl_minus = _nl(minus, m)
    minus_coeffs = [laurent_coeffs(s) for s in sym_minus]
    table, closed = [], []
    for p in range(p_max + 1):
        head = base * sym_plus[p]
        if head.is_zero():
            table.append((LaurentPoly(),) * (q_max + 1))
            closed.append(RationalFunction.zero())
            continue
        head_coeffs = laurent_coeffs(head)
        table.append(tuple(chi_L_pairing(head_coeffs, s) for s in minus_coeffs))
        closed.append(chi_L(head * nl_minus))
    total = chi_L(base * _nl(plus, m) * nl_minus)
    return tuple(table), tuple(closed), total


@dataclass(frozen=True)
class StageCertificate:
    stage: int
    index: int | None
    certificate: object

    @property
    def passed(self) -> bool:
        return self.certificate.passed

    def shift(self, k: int) -> "StageCertificate":
        return StageCertificate(self.stage, self.index, self.certificate.shift(k))

    def to_json(self) -> dict:
        out = {"stage": self.stage}
        if self.index is not None:
            out["index"] = self.index
        out.update(self.certificate.to_json())
        return out


@dataclass(frozen=True)
class BiseriesReport:
    tr_pq: tuple
    tr_p: tuple
    total: RationalFunction
    certificates: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.certificates)

    def shift(self, k: int) -> "BiseriesReport":
        """The report for the bundle twisted by the character λ^k."""
        return BiseriesReport(tuple(tuple(v.shift(k) for v in row) for row in self.tr_pq),
                              tuple(v.shift(k) for v in self.tr_p), self.total.shift(k),
                              tuple(c.shift(k) for c in self.certificates))

    def to_json(self) -> dict:
        return {
            "tr_pq": [[p, q, v.to_json()] for p, row in enumerate(self.tr_pq)
                      for q, v in enumerate(row)],
            "tr_p": [v.to_json() for v in self.tr_p],
            "total": self.total.to_json(),
            "certificates": [c.to_json() for c in self.certificates],
        }


def _partial_sums(terms) -> list:
    out = []
    acc = RationalFunction.zero() if isinstance(terms[0], RationalFunction) else LaurentPoly()
    for t in terms:
        acc = acc + t
        out.append(acc)
    return out


def _stage_offsets(action: LinearAction, bundle: VirtualBundle, p_max: int):
    zero_offset = None
    inf_offsets = [None] * (p_max + 1)
    for comp in fixed_locus(action):
        plus, _ = _sides(comp)
        top_plus = max((x.character for x in plus), default=0)
        for l, c, _mult in bundle:
            e = fiber_character((l, c), comp)
            zero_offset = e if zero_offset is None else min(zero_offset, e)
            for p in range(p_max + 1):
                if p and not plus:
                    continue
                bound = -(e + p * top_plus)
                inf_offsets[p] = bound if inf_offsets[p] is None else min(inf_offsets[p], bound)
    return (zero_offset or 0), [o or 0 for o in inf_offsets]


def _times(x: RationalFunction, mult: int) -> RationalFunction:
    return x if mult == 1 else x.scale(mult)


def biseries(action: LinearAction, bundle: VirtualBundle, p_max: int = 8,
             q_max: int = 8) -> BiseriesReport:
    """Sum the bifiltration traces q-first at infinity, then p at zero, with certificates."""
    for name, value in (("p_max", p_max), ("q_max", q_max)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise InvalidInputError(f"{name} must be an integer >= 1, got {value!r}")
    # every term scales by λ^c0 under a global character twist
    c0 = min((c for _, c, _ in bundle), default=0)
    report = _biseries(action, bundle.shift(-c0), p_max, q_max)
    return report.shift(c0) if c0 else report


@lru_cache(maxsize=4096)
def _biseries(action: LinearAction, bundle: VirtualBundle, p_max: int, q_max: int):
    table = [[LaurentPoly()] * (q_max + 1) for _ in range(p_max + 1)]
    closed = [RationalFunction.zero()] * (p_max + 1)
    total = RationalFunction.zero()
    for comp in fixed_locus(action):
        for l, c, mult in bundle:
            e = fiber_character((l, c), comp)
            unit_table, unit_closed, unit_total = _unit_tables(comp, l, p_max, q_max)
            for p in range(p_max + 1):
                row = table[p]
                for q, v in enumerate(unit_table[p]):
                    if v:
                        row[q] = row[q] + v.shift(e) * mult
                if unit_closed[p]:
                    closed[p] = closed[p] + _times(unit_closed[p].shift(e), mult)
            total = total + _times(unit_total.shift(e), mult)
    zero_offset, inf_offsets = _stage_offsets(action, bundle, p_max)
    certs = [StageCertificate(1, p, converges_to(_partial_sums(table[p]), closed[p],
                                                 INFINITY_POINT, inf_offsets[p]))
             for p in range(p_max + 1)]
    certs.append(StageCertificate(2, None, converges_to(_partial_sums(closed), total,
                                                        ZERO_POINT, zero_offset)))
    return BiseriesReport(tuple(tuple(r) for r in table), tuple(closed), total, tuple(certs))


@dataclass(frozen=True)
class ComponentSeries:
    component: FixedComponent
    value: RationalFunction
    point: str
    terms: tuple
    certificate: object

    def shift(self, k: int) -> "ComponentSeries":
        return ComponentSeries(self.component, self.value.shift(k), self.point,
                               tuple(t.shift(k) for t in self.terms), self.certificate.shift(k))

    def to_json(self) -> dict:
        return {
            "component": self.component.to_json(),
            "value": self.value.to_json(),
            "point": self.point,
            "terms": [t.to_json() for t in self.terms],
            "certificate": self.certificate.to_json(),
        }


@dataclass(frozen=True)
class FiltrationTraceReport:
    per_component: tuple
    total: RationalFunction

    @property
    def passed(self) -> bool:
        return all(part.certificate.passed for part in self.per_component)

    def shift(self, k: int) -> "FiltrationTraceReport":
        return FiltrationTraceReport(tuple(part.shift(k) for part in self.per_component),
                                     self.total.shift(k))

    def to_json(self) -> dict:
        return {"per_component": [part.to_json() for part in self.per_component],
                "total": self.total.to_json()}


def _resum(terms, den: LaurentPoly, low: int, high: int) -> RationalFunction:
    """Rebuild N / D from a power series in λ known through exponent ``high``."""
    series = LaurentPoly()
    for t in terms:
        series = series + t
    num = {k: v for k, v in (series * den).items() if low <= k <= high}
    return RationalFunction.from_laurent(LaurentPoly(num)) / RationalFunction.from_laurent(den)


def _one_sided(comp: FixedComponent, bundle: VirtualBundle, lines: tuple, flip: bool, p_max: int):
    # series in μ = λ (flip False) or μ = λ^-1 (flip True); all characters positive in μ
    m = comp.dim
    fibers = [(l, (-1 if flip else 1) * fiber_character((l, c), comp), mult)
              for l, c, mult in bundle]
    if not fibers:
        return RationalFunction.zero(), (LaurentPoly(),) * (p_max + 1), 0
    # the poles of χ_L(F|_Z ⊗ NL) have order at most (m + 1) * mult at each factor
    den = LaurentPoly.constant(1)
    for line in lines:
        den = den * LaurentPoly({0: 1, abs(line.character): -1}) ** (line.mult * (m + 1))
    e_min = min(e for _, e, _ in fibers)
    e_max = max(e for _, e, _ in fibers)
    high = den.degree() + e_max
    needed = max(p_max, high - e_min)
    chars = tuple(EquivLine(x.degree, abs(x.character), x.mult) for x in lines)
    sym = _sym_series(chars, m, needed)
    terms = []
    for p in range(needed + 1):
        value = LaurentPoly()
        for l, e, mult in fibers:
            value = value + chi_L(embed_line(l, e, m) * sym[p]).to_laurent() * mult
        terms.append(value)
    resummed = _resum(terms, den, e_min, high)
    return resummed, tuple(terms[:p_max + 1]), e_min


def single_filtration_trace(action: LinearAction, bundle: VirtualBundle,
                            p_max: int = 8) -> FiltrationTraceReport:
    """One-sided filtration traces for actions without hyperbolic components.

    Each component is summed at the single point where its series converges and
    resummed to a rational function from its known denominator.
    """
    if isinstance(p_max, bool) or not isinstance(p_max, int) or p_max < 1:
        raise InvalidInputError(f"p_max must be an integer >= 1, got {p_max!r}")
    check = is_purely_nonhyperbolic(action)
    if not check:
        raise NotApplicableError(
            f"component of weight {check.witness.weight} has both incoming and outgoing directions",
            witness=check.witness)
    c0 = min((c for _, c, _ in bundle), default=0)
    report = _single_filtration(action, bundle.shift(-c0), p_max)
    return report.shift(c0) if c0 else report


@lru_cache(maxsize=4096)
def _single_filtration(action: LinearAction, bundle: VirtualBundle, p_max: int):
    parts = []
    total = RationalFunction.zero()
    for comp in fixed_locus(action):
        plus, minus = _sides(comp)
        flip = bool(minus)
        value, terms, e_min = _one_sided(comp, bundle, minus if flip else plus, flip, p_max)
        if flip:
            value = value.invert_variable()
            terms = tuple(t.invert_variable() for t in terms)
            point = INFINITY_POINT
        else:
            point = ZERO_POINT
        cert = converges_to(_partial_sums(terms), value, point, e_min)
        parts.append(ComponentSeries(comp, value, point, terms, cert))
        total = total + value
    return FiltrationTraceReport(tuple(parts), total)


def exactness_defect(action: LinearAction, sequence) -> RationalFunction:
    """sum_i (-1)^i of the fixed-part traces of the terms of ``sequence``."""
    defect = RationalFunction.zero()
    for i, bundle in enumerate(sequence):
        value = localize(action, bundle).total
        defect = defect - value if i % 2 else defect + value
    return defect
