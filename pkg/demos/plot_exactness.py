"""
The trace is additive on exact sequences
========================================

0 -> O(d) -> O(d+1)^{N+1} -> T(d) -> 0 is the Euler sequence. Its
alternating trace vanishes; a pair of bundles that is not exact does not.
"""

from gm_lefschetz.adelictrace import exactness_defect
from gm_lefschetz.cohomology import VirtualBundle, euler_sequence
from gm_lefschetz.torusaction import LinearAction

action = LinearAction.of(3, 1, 0, -2)
for d in range(-3, 4):
    print(f"Euler sequence twisted by O({d}):", exactness_defect(action, euler_sequence(action, d)))

print("O then O(1):", exactness_defect(action, [VirtualBundle.line(0), VirtualBundle.line(1)]))
