"""The built-in verification grid.

Every weight vector with entries in [-3, 3] for N = 1, 2, a fixed-seed sample
of them for N = 3, each crossed with O(l) ⊗ λ^c for l in [-6, 6], c in [-2, 2].
Work is split per action (the engines cache per action and twist) and fanned
out to a bounded process pool; results come back in input order.
"""

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .adelictrace import biseries, exactness_defect, single_filtration_trace
from .cech import cech_oracle
from .cohomology import VirtualBundle, euler_sequence, h_character, lefschetz_direct
from .localization import localize
from .torusaction import LinearAction, is_purely_nonhyperbolic

WEIGHT_RANGE = range(-3, 4)
TWISTS = range(-6, 7)
CHARACTERS = range(-2, 3)
SAMPLE_SEED = 20231
SAMPLE_SIZE = 500


def grid_actions(max_n: int = 3, sample_size: int = SAMPLE_SIZE, seed: int = SAMPLE_SEED) -> list:
    """All weight vectors for N <= 2, then a sorted fixed-seed sample for N = 3."""
    actions = []
    for n in range(1, min(max_n, 2) + 1):
        actions += [tuple(w) for w in product(WEIGHT_RANGE, repeat=n + 1)]
    if max_n >= 3:
        full = [tuple(w) for w in product(WEIGHT_RANGE, repeat=4)]
        actions += sorted(random.Random(seed).sample(full, min(sample_size, len(full))))
    return actions


@dataclass(frozen=True)
class CaseResult:
    weights: tuple
    l: int
    c: int
    direct: str
    localized: str
    biseries: str
    agree: bool
    certified: bool
    # raw valuation sequences (stage one for p = 0..p_max, then stage two)
    valuations: tuple
    filtration_agrees: bool | None
    cech_agrees: bool | None

    def strictly_increasing(self) -> bool:
        return all(_strict(v) for v in self.valuations)

    def final_margin(self):
        """min over certificates of (last valuation - last index); None is +infinity."""
        margins = [v[-1] - (len(v) - 1) for v in self.valuations if v[-1] is not None]
        return min(margins) if margins else None


def _strict(vals) -> bool:
    for a, b in zip(vals, vals[1:]):
        if a is None and b is None:
            continue
        if a is None or (b is not None and b <= a):
            return False
    return True


@dataclass(frozen=True)
class ActionResult:
    weights: tuple
    cases: tuple
    euler_defects_zero: bool
    nonhyperbolic: bool

    @property
    def n(self) -> int:
        return len(self.weights) - 1


def check_action(weights: tuple, p_max: int = 8, q_max: int = 8, trunc: int = 6,
                 with_cech: bool = True) -> ActionResult:
    action = LinearAction.of(*weights)
    nonhyperbolic = bool(is_purely_nonhyperbolic(action))
    cech = with_cech and action.n <= 2
    cases = []
    for l in TWISTS:
        for c in CHARACTERS:
            bundle = VirtualBundle.line(l, c)
            direct = lefschetz_direct(action, bundle)
            local = localize(action, bundle).total
            report = biseries(action, bundle, p_max, q_max)
            filtration = None
            if nonhyperbolic:
                filtration = single_filtration_trace(action, bundle, p_max).total == local
            cech_ok = None
            if cech:
                oracle = cech_oracle(action, l, c, trunc)
                cech_ok = bool(oracle.stabilized) and oracle.same_groups(h_character(action, l, c))
            cases.append(CaseResult(
                weights, l, c, str(direct), str(local), str(report.total),
                direct == local == report.total, report.passed,
                tuple(cert.certificate.valuations for cert in report.certificates),
                filtration, cech_ok))
    defects = all(exactness_defect(action, euler_sequence(action, d)).is_zero()
                  for d in range(-3, 4))
    return ActionResult(weights, tuple(cases), defects, nonhyperbolic)


def _check(args):
    return check_action(*args)


def default_workers() -> int:
    return max(1, min(8, os.cpu_count() or 1))


def run_grid(actions=None, p_max: int = 8, q_max: int = 8, trunc: int = 6,
             workers: int | None = None, with_cech: bool = True) -> list:
    """Check every action of the grid; the output order matches ``actions``."""
    if actions is None:
        actions = grid_actions()
    workers = default_workers() if workers is None else workers
    jobs = [(tuple(w), p_max, q_max, trunc, with_cech) for w in actions]
    if workers <= 1:
        return [_check(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_check, jobs, chunksize=8))


def summarize(results) -> dict:
    cases = [case for r in results for case in r.cases]
    return {
        "actions": len(results),
        "cases": len(cases),
        "disagreements": sum(not c.agree for c in cases),
        "failed_certificates": sum(not c.certified for c in cases),
        "not_strictly_increasing": sum(not c.strictly_increasing() for c in cases),
        "filtration_mismatches": sum(c.filtration_agrees is False for c in cases),
        "cech_mismatches": sum(c.cech_agrees is False for c in cases),
        "euler_defects": sum(not r.euler_defects_zero for r in results),
    }
