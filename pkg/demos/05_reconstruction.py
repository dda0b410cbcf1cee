"""From distances back to the point, and the realizability question.

Given the d+1 vertex distances, subtracting sphere equations pairwise
leaves a nonsingular linear system; one quadratic consistency check then
separates genuine distance tuples from impostors.  The probe at the end
asks: if positive numbers satisfy the quartic relation, do they always
come from an actual point?  Findings are data, not a theorem.
"""

import numpy as np

from simplexdist import (
    CartesianSimplex,
    complete_distance_tuple,
    probe_realizability,
    reconstruct_point,
)

simplex = CartesianSimplex.build(2, 1.0)

# a round trip: point -> distances -> point
target = np.array([0.31, -0.54])
result = reconstruct_point(simplex, simplex.distances(target))
print(f"target {target} -> {result.status} at {np.round(result.point, 12)}")

# the all-ones tuple satisfies no point: the solver lands on the
# circumcenter and the residual reports how badly the last equation fails
result = reconstruct_point(simplex, [1.0, 1.0, 1.0])
print(f"(1, 1, 1) -> {result.status}, landing {np.round(result.point, 6)}, "
      f"residual {result.residual:.6f} (exactly 2/3)")

# completing a tuple through the relation: the quartic is quadratic in the
# squared last distance, so each prefix gives at most two candidates
roots = complete_distance_tuple(2, 1, [0.5773502691896258] * 2)
print(f"\nprefix (1/sqrt(3), 1/sqrt(3)) completes to t3 in {np.round(roots, 9)}")

# the probe: draw prefixes, complete them, try to reconstruct every root
report = probe_realizability(d=2, edge_sq=1, trials=1000, seed=11)
print("\n1000 trials:", report.counts)
print("every real non-negative completion reconstructed feasibly" if
      report.counts["infeasible"] == 0 else "infeasible completions found!")
