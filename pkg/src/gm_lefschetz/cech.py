"""Brute-force Čech cohomology of O(l) on P^N, split by G_m-weight.

Independent check on the monomial description in ``cohomology``: the
alternating Čech complex of the standard affine cover is built explicitly,
sections of O(l) over U_I being the Laurent monomials x^m with sum m = l and
m_j >= 0 off I. Monomials are truncated by pole order (m_j >= -M for all j),
every weight block of the complex is reduced by exact Gaussian elimination
over Q, and the answer at truncation M is compared with the one at M - 1.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .cohomology import CohomologyCharacter
from .errors import InvalidInputError
from .exactnum import LaurentPoly
from .torusaction import LinearAction


def _compositions(total: int, parts: int):
    if total < 0:
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _sparse_rank(rows) -> int:
    """Rank over Q of a list of sparse rows {column: value}."""
    pivots = {}
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        while row:
            hits = [k for k in row if k in pivots]
            if not hits:
                break
            col = min(hits)
            prow = pivots[col]
            f = row[col] / prow[col]
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        if row:
            pivots[min(row)] = row
    return len(pivots)


@lru_cache(maxsize=4096)
def _cech_unit(weights: tuple, l: int, trunc: int) -> tuple:
    n = len(weights) - 1
    faces = [frozenset(c) for p in range(n + 1) for c in combinations(range(n + 1), p + 1)]
    # basis of the Čech complex grouped by weight: weight -> degree -> list of (face, m)
    blocks = {}
    for shifted in _compositions(l + (n + 1) * trunc, n + 1):
        m = tuple(s - trunc for s in shifted)
        poles = frozenset(j for j, mj in enumerate(m) if mj < 0)
        w = -sum(mj * a for mj, a in zip(m, weights))
        for face in faces:
            if poles <= face:
                blocks.setdefault(w, {}).setdefault(len(face) - 1, []).append((face, m))
    result = {}
    for w, by_deg in blocks.items():
        index = {deg: {b: i for i, b in enumerate(basis)} for deg, basis in by_deg.items()}
        ranks = {}
        for deg, basis in by_deg.items():
            target = index.get(deg + 1)
            if not target:
                ranks[deg] = 0
                continue
            rows = []
            for face, m in basis:
                row = {}
                for j in range(n + 1):
                    if j in face:
                        continue
                    bigger = face | {j}
                    sign = -1 if sum(1 for i in bigger if i < j) % 2 else 1
                    row[target[(bigger, m)]] = sign
                rows.append(row)
            ranks[deg] = _sparse_rank(rows)
        for deg, basis in by_deg.items():
            h = len(basis) - ranks[deg] - ranks.get(deg - 1, 0)
            if h:
                result.setdefault(deg, {})[w] = h
    return tuple(sorted((deg, tuple(sorted(chars.items()))) for deg, chars in result.items()))


def _as_character(unit, c: int, stabilized=None) -> CohomologyCharacter:
    return CohomologyCharacter({deg: LaurentPoly(dict(chars)).shift(c) for deg, chars in unit},
                               stabilized)


def cech_oracle(action: LinearAction, l: int, c: int = 0, trunc: int = 6) -> CohomologyCharacter:
    """Cohomology characters of O(l) ⊗ λ^c from the truncated Čech complex.

    ``stabilized`` reports whether truncations ``trunc`` and ``trunc - 1`` agree.
    """
    if isinstance(trunc, bool) or not isinstance(trunc, int) or trunc < 1:
        raise InvalidInputError(f"truncation must be a positive integer, got {trunc!r}")
    here = _cech_unit(action.weights, l, trunc)
    below = _cech_unit(action.weights, l, trunc - 1)
    return _as_character(here, c, here == below)
