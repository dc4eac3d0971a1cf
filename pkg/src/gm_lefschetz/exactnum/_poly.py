"""Dense univariate polynomials over the integers.

A polynomial a_0 + a_1 x + ... + a_n x^n is a tuple (a_0, ..., a_n) of ints
with a_n != 0; the zero polynomial is the empty tuple. All functions are pure
and return fresh tuples.

The gcd is the heuristic GCD of Char, Geddes and Gonnet (evaluate at a large
integer, take an integer gcd, interpolate back), with a primitive Euclidean
fallback for the rare evaluation points where the heuristic gives up.
"""

from fractions import Fraction
from math import gcd, isqrt

Poly = tuple

ZERO: Poly = ()
ONE: Poly = (1,)

_HEU_GCD_TRIES = 6


def strip(coeffs) -> Poly:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


def degree(f: Poly) -> int:
    return len(f) - 1


def low_degree(f: Poly) -> int:
    """Index of the lowest nonzero coefficient (-1 for zero)."""
    for i, a in enumerate(f):
        if a:
            return i
    return -1


def is_monomial(f: Poly) -> bool:
    return bool(f) and low_degree(f) == len(f) - 1


def content(f: Poly) -> int:
    g = 0
    for a in f:
        g = gcd(g, a)
        if g == 1:
            break
    return g


def add(f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, b in enumerate(g):
        out[i] += b
    return strip(out)


def neg(f: Poly) -> Poly:
    return tuple(-a for a in f)


def sub(f: Poly, g: Poly) -> Poly:
    return add(f, neg(g))


def scale(f: Poly, c: int) -> Poly:
    if not c:
        return ZERO
    return tuple(a * c for a in f)


def shift(f: Poly, k: int) -> Poly:
    """Multiply by x**k (k >= 0)."""
    if not f or not k:
        return f
    return (0,) * k + f


def mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ZERO
    if len(f) == 1:
        return scale(g, f[0])
    if len(g) == 1:
        return scale(f, g[0])
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return tuple(out)


def pow_(f: Poly, e: int) -> Poly:
    result = ONE
    base = f
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def evaluate(f: Poly, x):
    acc = 0
    for a in reversed(f):
        acc = acc * x + a
    return acc


def exact_div(f: Poly, g: Poly):
    """Return q with f == g*q over the integers, or None if there is no such q."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return ZERO
    dg = len(g) - 1
    df = len(f) - 1
    if df < dg:
        return None
    lc = g[-1]
    rem = list(f)
    q = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        c = rem[k + dg]
        if c:
            t, r = divmod(c, lc)
            if r:
                return None
            q[k] = t
            for j in range(dg + 1):
                rem[k + j] -= t * g[j]
    if any(rem[:dg]):
        return None
    return strip(q)


def primitive(f: Poly) -> Poly:
    c = content(f)
    if c <= 1:
        return f
    return tuple(a // c for a in f)


def _interpolate(h: int, x: int) -> Poly:
    # symmetric x-adic digits of h
    out = []
    while h:
        r = h % x
        if r > x // 2:
            r -= x
        out.append(r)
        h = (h - r) // x
    return tuple(out)


def _max_norm(f: Poly) -> int:
    return max(abs(a) for a in f)


def _euclid_gcd(f: Poly, g: Poly) -> Poly:
    # monic Euclid over Q, made primitive at the end
    a = [Fraction(c) for c in f]
    b = [Fraction(c) for c in g]
    while b:
        lb = b[-1]
        while len(a) >= len(b):
            t = a[-1] / lb
            off = len(a) - len(b)
            for j, c in enumerate(b):
                a[off + j] -= t * c
            while a and not a[-1]:
                a.pop()
            if not a:
                break
        a, b = b, a
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    return primitive(tuple(int(c * den) for c in a))


def _primitive_gcd(f: Poly, g: Poly) -> Poly:
    if len(f) == 1 or len(g) == 1:
        return ONE
    fn, gn = _max_norm(f), _max_norm(g)
    b = 2 * min(fn, gn) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 4)
    for _ in range(_HEU_GCD_TRIES):
        ff = evaluate(f, x)
        gg = evaluate(g, x)
        if ff and gg:
            h = gcd(ff, gg)
            cand = primitive(_interpolate(h, x))
            if cand and exact_div(f, cand) is not None and exact_div(g, cand) is not None:
                return cand if cand[-1] > 0 else neg(cand)
            for co, target, other in ((ff // h, f, g), (gg // h, g, f)):
                cof = _interpolate(co, x)
                if not cof:
                    continue
                cand = exact_div(target, cof)
                if cand and exact_div(other, cand) is not None:
                    cand = primitive(cand)
                    return cand if cand[-1] > 0 else neg(cand)
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return _euclid_gcd(f, g)


def gcd_poly(f: Poly, g: Poly) -> Poly:
    """Greatest common divisor over Z, including the integer content.

    Normalised to a positive leading coefficient; gcd(0, 0) is 0.
    """
    if not f:
        return g if not g or g[-1] > 0 else neg(g)
    if not g:
        return f if f[-1] > 0 else neg(f)
    c = gcd(content(f), content(g))
    vf, vg = low_degree(f), low_degree(g)
    v = min(vf, vg)
    # power-of-x and monomial cases need no real gcd work
    if len(f) - 1 == vf or len(g) - 1 == vg:
        return shift((c,), v)
    pf = primitive(f[vf:])
    pg = primitive(g[vg:])
    if pf == pg or pf == neg(pg):
        h = pf
    else:
        h = _primitive_gcd(pf, pg)
    if h[-1] < 0:
        h = neg(h)
    return shift(scale(h, c), v)
