"""
A fixed curve in the plane
==========================

Weights (1, 1, 0) fix a line and a point. The line contributes through
its normal bundle, which is where K-theory of the fixed component enters.
"""

from gm_lefschetz.adelictrace import biseries
from gm_lefschetz.cohomology import VirtualBundle, h_character
from gm_lefschetz.localization import localize
from gm_lefschetz.torusaction import LinearAction, fixed_locus, tangent_split

plane = LinearAction.of(1, 1, 0)
for comp in fixed_locus(plane):
    split = tangent_split(plane, comp)
    print(f"weight {comp.weight}: dim {comp.dim}, incoming {split.plus}, outgoing {split.minus}")

for l in (0, 1, 2):
    bundle = VirtualBundle.line(l)
    loc = localize(plane, bundle)
    print(f"O({l}):", [str(p.value) for p in loc.parts], "->", loc.total)
    print("   H^0 character:", h_character(plane, l)[0])

# the partial sums at 0 stall once, because chi(P^1, O(-1)) = 0
cert = biseries(plane, VirtualBundle.line(0)).certificates[-1].certificate
print("valuations:", cert.valuations)
print("strictly increasing:", cert.strictly_increasing, " passes with offset", cert.offset, ":",
      cert.passed)
