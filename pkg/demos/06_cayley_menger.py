"""Cayley-Menger determinants: degeneracy witness and volume formula.

The determinant of the bordered squared-distance matrix of n points
vanishes exactly when they fit in fewer than n-1 dimensions, and for a
full simplex it carries the squared volume.  Rational input stays exact
(fraction-free elimination); the quartic distance identity is the same
degeneracy fact in disguise: a regular simplex plus one more point makes
d+2 points in d-space.
"""

from fractions import Fraction

from simplexdist import (
    EmbeddedSimplex,
    SampleConfig,
    SquaredDistanceMatrix,
    cayley_menger_det,
    relation_vs_cayley_menger,
    sample_points,
    simplex_volume,
)

# unit equilateral triangle: determinant -3, area sqrt(3)/4
triangle = SquaredDistanceMatrix.regular(3, 1)
print("equilateral determinant:", cayley_menger_det(triangle))
print("area:", simplex_volume(triangle))

# regular tetrahedron: volume 1/(6 sqrt(2))
print("tetrahedron volume:", simplex_volume(SquaredDistanceMatrix.regular(4, 1)))

# collinear points are flat, and the determinant says so exactly
flat = SquaredDistanceMatrix([[0, 1, 4], [1, 0, 1], [4, 1, 0]])
print("collinear determinant:", cayley_menger_det(flat), "volume:", simplex_volume(flat))

# both degeneracy witnesses vanish together on genuine distance tuples
simplex = EmbeddedSimplex(3, Fraction(1))
(point, sample), *_ = sample_points(simplex, SampleConfig(seed=1, count=1))
residual, det = relation_vs_cayley_menger(3, 1, sample.squared)
print("\ngenuine tuple:   relation residual", residual, "| bordered determinant", det)

# an impostor tuple fails both
residual, det = relation_vs_cayley_menger(2, 1, [1, 1, 1])
print("impostor (1,1,1): relation residual", residual, "| bordered determinant", det)
