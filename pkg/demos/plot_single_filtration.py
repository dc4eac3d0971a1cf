"""
Actions with one-sided flow
===========================

When every weight takes one of two values, each fixed component only
has incoming or only outgoing directions. One filtration is enough, and
each component sums at the point where its series converges.
"""

from gm_lefschetz import NotApplicableError
from gm_lefschetz.adelictrace import single_filtration_trace
from gm_lefschetz.cohomology import VirtualBundle
from gm_lefschetz.localization import localize
from gm_lefschetz.torusaction import LinearAction

action = LinearAction.of(2, 2, 0, 0)
bundle = VirtualBundle([(1, 0, 1), (-2, 1, -1)])
report = single_filtration_trace(action, bundle)
for part in report.per_component:
    print(f"weight {part.component.weight} at {part.point}: {part.value}")
    print("   first terms:", [str(t) for t in part.terms[:4]])
print("total:", report.total)
print("localize:", localize(action, bundle).total)

# three distinct weights make the middle point hyperbolic
try:
    single_filtration_trace(LinearAction.of(0, 1, 2), bundle)
except NotApplicableError as err:
    print("refused:", err, "witness weight", err.witness.weight)
