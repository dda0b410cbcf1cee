"""The quartic distance identity, checked with zero tolerance.

For a regular d-simplex of edge a and any point of the ambient space with
vertex distances t_1..t_{d+1}:

    (d+1) * (a^4 + sum t_j^4) == (a^2 + sum t_j^2)^2

Nothing here is floating point: the simplex is embedded so that squared
distances are rational, and the identity only involves even powers.
"""

from fractions import Fraction

from simplexdist import (
    BarycentricPoint,
    EmbeddedSimplex,
    SampleConfig,
    relation_residual_exact,
    sample_points,
)

# a triangle with squared edge 4/9, i.e. edge 2/3
simplex = EmbeddedSimplex(2, Fraction(4, 9))

# the centroid: all squared distances equal the squared circumradius
centroid = BarycentricPoint((Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)))
squared = simplex.squared_distances(centroid)
print("squared distances from the centroid:", squared)
print("squared circumradius:", simplex.circumradius_sq)
print("residual:", relation_residual_exact(2, Fraction(4, 9), squared))

# points far outside the simplex satisfy the identity just as exactly
outside = BarycentricPoint((Fraction(5, 2), Fraction(-2), Fraction(1, 2)))
squared = simplex.squared_distances(outside)
print("\nsquared distances from a far-away point:", squared)
print("residual:", relation_residual_exact(2, Fraction(4, 9), squared))

# and so do thousands of seeded samples, in every dimension
print()
for d in range(1, 9):
    s = EmbeddedSimplex(d, Fraction(1))
    samples = sample_points(s, SampleConfig(seed=d, count=1000))
    residuals = {
        relation_residual_exact(d, 1, sample.squared) for _, sample in samples
    }
    print(f"d={d}: 1000 exact samples, residual set = {residuals}")
