"""
The projective line, three ways
===============================

λ acts on P^1 by scaling the first coordinate. The trace on the
cohomology of O is 1, and both fixed points contribute a geometric
series that only sums to 1 together.
"""

from gm_lefschetz.adelictrace import biseries
from gm_lefschetz.cohomology import VirtualBundle, lefschetz_direct
from gm_lefschetz.localization import localize
from gm_lefschetz.torusaction import LinearAction, fixed_locus

line = LinearAction.of(1, 0)
O = VirtualBundle.line(0)

for comp in fixed_locus(line):
    print("fixed point of weight", comp.weight, "cotangent character",
          [x.character for x in comp.conormal])

# cohomology first: only H^0 survives, spanned by the constants
print("direct:", lefschetz_direct(line, O))

loc = localize(line, O)
for part in loc.parts:
    print("  contribution of weight", part.component.weight, ":", part.value)
print("localized:", loc.total)

# the bifiltration sums the graded pieces; every partial sum is a Laurent polynomial
report = biseries(line, O)
print("biseries:", report.total, "certificates pass:", report.passed)
print("stage-two valuations:", report.certificates[-1].certificate.valuations)

# twisting by O(1) gives the two sections x_0, x_1
print("O(1):", localize(line, VirtualBundle.line(1)).total)
