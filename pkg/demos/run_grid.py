"""
The verification grid
=====================

Every action with weights in [-3, 3] on P^1 and P^2, and a fixed sample on
P^3, against every O(l) ⊗ λ^c with |l| <= 6, |c| <= 2. Pass ``--quick`` to
stop at P^1.
"""

import sys
import time

from gm_lefschetz.grid import grid_actions, run_grid, summarize

max_n = 1 if "--quick" in sys.argv else 3
start = time.perf_counter()
results = run_grid(grid_actions(max_n))
for key, value in summarize(results).items():
    print(f"{key:>24}: {value}")
print(f"{'seconds':>24}: {time.perf_counter() - start:.0f}")
