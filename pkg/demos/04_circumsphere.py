"""Vanishing polynomials on the circumsphere, and a planar surprise.

Restricted to the circumsphere, two low-degree polynomials obviously
vanish: sum t_j^2 - d*a^2 and sum t_j^4 - d*a^4.  The two are tied to the
quartic relation by an exact identity, so either pair generates the third.
Whether they generate the whole restricted ideal is open; the discovery
pipeline reports whatever else it finds as uncertified "extras".

For a triangle the extras are real: the circumsphere is a circle, and on
each arc the largest vertex distance equals the sum of the other two
(Pompeiu/Ptolemy), so a product of three linear forms vanishes on the
whole circle.  It is a cubic outside the two-generator ideal.
"""

from simplexdist import (
    MultiPoly,
    circumsphere_quadratic,
    discover_on_sphere,
    proportional,
    verify_circumsphere_identity,
)

# degree 2: exactly the quadratic, certified
report = discover_on_sphere(d=2, edge_sq=1, max_degree=2, seed=3)
print("degree-2 certified candidates:")
for candidate in report.certified:
    print("  ", candidate.poly)
print("matches sum t^2 - d a^2:",
      proportional(report.certified[0].poly, circumsphere_quadratic(2, 1)))

# the identity linking the three polynomials, verified symbolically
print("\nidentity (d+1)*quartic == relation + ((d+1)a^2 + quadratic)^2 - (d+1)^2 a^4:")
for d in range(2, 9):
    print(f"  d={d}: {verify_circumsphere_identity(d, 1)}")

# degree 3 on the circle: the null dimension jumps past the ideal's slice
report = discover_on_sphere(d=2, edge_sq=1, max_degree=3, seed=3)
print("\nnull dimension by degree:", report.null_dim_by_degree)
print(f"certified {len(report.certified)}, extras {len(report.extras)}")

# the Pompeiu cubic explains the extras
t1, t2, t3 = (MultiPoly.variable(i, 3) for i in range(3))
pompeiu = (t1 + t2 - t3) * (t1 - t2 + t3) * (t2 + t3 - t1)
print("\nthe cubic", pompeiu)
print("vanishes on the circle but lies outside the two-generator ideal;")
print("the ideal's degree-3 slice is 4-dimensional, the observed nullspace is",
      report.null_dim_by_degree[3])
