"""
K-theory of projective space with λ-coefficients
================================================

K_0(P^m) is spanned by powers of η = [O(-1)] - 1 with η^(m+1) = 0. A class
inverts exactly when its rank character is nonzero.
"""

from gm_lefschetz import NotInvertibleError
from gm_lefschetz.k0ring import (EquivLine, K0Element, chi_L, embed_line, exterior_alternating_sum,
                                 k0_invert, symmetric_power_sum)

conormal = [EquivLine(-1, 1)]
alt = exterior_alternating_sum(conormal, 1)
print("1 - [O(-1) λ]:", alt)
nl = k0_invert(alt)
print("its inverse:", nl)
print("check:", alt * nl == K0Element.one(1))
print("chi_L of the inverse:", chi_L(nl))

# Sym^p of the same line is O(-p) λ^p, whose Euler characteristic is 1 - p
print([str(chi_L(symmetric_power_sum(conormal, 1, p))) for p in range(5)])

try:
    k0_invert(K0Element.one(1) - embed_line(0, 0, 1))
except NotInvertibleError as err:
    print("refused:", err)
