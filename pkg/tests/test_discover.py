"""The numeric-then-exact vanishing-polynomial pipeline."""

import json
import math
from fractions import Fraction

import numpy as np
import pytest

from simplexdist.discover import (
    CERT_DIVISIBLE,
    CERT_SPHERE_IDEAL,
    _in_sphere_ideal,
    build_eval_matrix,
    discover_on_sphere,
    discover_vanishing,
    enumerate_monomials,
    independence_test,
    numeric_nullspace,
    rationalize,
)
from simplexdist.geom import EmbeddedSimplex, SampleConfig, sample_points
from simplexdist.poly import (
    MultiPoly,
    circumsphere_quadratic,
    circumsphere_quartic,
    distance_relation,
    divide_last_variable,
    proportional,
    segment_generator,
)


# -- monomial bases ---------------------------------------------------------------


def test_monomial_count_three_vars_degree_four():
    basis = enumerate_monomials(3, 4)
    assert len(basis) == math.comb(7, 3) == 35


def test_monomials_univariate():
    basis = enumerate_monomials(1, 3)
    assert basis.exponents == ((0,), (1,), (2,), (3,))


def test_monomials_degree_zero():
    assert enumerate_monomials(2, 0).exponents == ((0, 0),)


def test_monomials_graded_and_strictly_ordered():
    basis = enumerate_monomials(3, 5)
    keys = [(sum(e), e) for e in basis.exponents]
    assert keys == sorted(keys)
    assert len(set(basis.exponents)) == len(basis)


def test_prefix_size():
    basis = enumerate_monomials(3, 4)
    assert basis.prefix_size(2) == math.comb(5, 3)


# -- evaluation matrix ---------------------------------------------------------------


def test_matrix_entries():
    basis = enumerate_monomials(3, 2)
    matrix = build_eval_matrix([[0.0, 1.0, 1.0]], basis)
    idx = {e: j for j, e in enumerate(basis.exponents)}
    assert matrix[0, idx[(0, 1, 1)]] == 1.0  # T2*T3
    assert matrix[0, idx[(1, 0, 0)]] == 0.0  # T1
    assert matrix[0, idx[(0, 0, 0)]] == 1.0  # constant


def test_matrix_arity_checked():
    with pytest.raises(ValueError):
        build_eval_matrix([[1.0, 2.0]], enumerate_monomials(3, 2))


def test_rank_of_degree_four_matrix():
    # the degree-<=4 slice of the vanishing ideal is one-dimensional, so a
    # 105 x 35 evaluation matrix has rank 35 - 1
    simplex = EmbeddedSimplex(2, 1)
    samples = sample_points(simplex, SampleConfig(seed=2, count=105))
    floats = np.array([s.float_distances() for _, s in samples])
    matrix = build_eval_matrix(floats, enumerate_monomials(3, 4))
    assert matrix.shape == (105, 35)
    assert np.linalg.matrix_rank(matrix, tol=1e-8 * np.linalg.norm(matrix, 2)) == 34


# -- numeric nullspace ----------------------------------------------------------------


def test_nullspace_of_degree_four_matrix():
    simplex = EmbeddedSimplex(2, 1)
    samples = sample_points(simplex, SampleConfig(seed=2, count=105))
    floats = np.array([s.float_distances() for _, s in samples])
    matrix = build_eval_matrix(floats, enumerate_monomials(3, 4))
    report = numeric_nullspace(matrix, 1e-8)
    assert report.null_dim == 1
    assert report.gap > 1e4
    assert not report.inconclusive


def test_nullspace_identity_matrix():
    report = numeric_nullspace(np.eye(5), 1e-8)
    assert report.null_dim == 0
    assert report.null_basis.shape == (0, 5)


def test_nullspace_basis_orthonormal():
    rng = np.random.default_rng(0)
    base = rng.normal(size=(40, 6))
    matrix = np.hstack([base, base[:, :2] @ np.array([[1.0, 2.0], [3.0, -1.0]])])
    report = numeric_nullspace(matrix, 1e-10)
    assert report.null_dim == 2
    gram = report.null_basis @ report.null_basis.T
    assert np.allclose(gram, np.eye(2), atol=1e-10)
    residual = np.linalg.norm(matrix @ report.null_basis.T, axis=0)
    assert np.all(residual <= 1e-10 * np.linalg.norm(matrix, 2) * 1.01)


def test_nullspace_wide_matrix_pads_spectrum():
    report = numeric_nullspace(np.array([[1.0, 0.0, 0.0]]), 1e-8)
    assert report.null_dim == 2
    assert len(report.singular_values) == 3


def test_nullspace_flags_small_gap_as_inconclusive():
    matrix = np.diag([1.0, 2e-7, 5e-8])  # kept and cut values only 4x apart
    report = numeric_nullspace(matrix, 1e-7)
    assert report.null_dim == 1
    assert report.gap == pytest.approx(4.0)
    assert report.inconclusive


def test_nullspace_rejects_empty():
    with pytest.raises(ValueError):
        numeric_nullspace(np.zeros((0, 3)))


# -- rational reconstruction -------------------------------------------------------------


def test_rationalize_scales_first_nonzero_to_one():
    assert rationalize([0.3333333333, 1.0]) == (Fraction(1), Fraction(3))


def test_rationalize_snaps_noise_to_zero():
    vec = rationalize([1e-12, 0.5, 0.25])
    assert vec == (0, 1, Fraction(1, 2))


def test_rationalize_respects_denominator_cap():
    (value,) = rationalize([1 / math.sqrt(2)], max_denominator=1000)
    assert value.denominator <= 1000
    assert value != Fraction(1, 2) ** Fraction(1, 2)  # no exact match exists


# -- full-space discovery ------------------------------------------------------------------


def test_discover_recovers_relation_d2():
    report = discover_vanishing(2, 1, 4, seed=1)
    assert report.nullspace.null_dim == 1
    assert report.nullspace.gap > 1e3
    (candidate,) = report.candidates
    assert candidate.certificate == CERT_DIVISIBLE
    assert proportional(candidate.poly, distance_relation(2, 1))


def test_discover_cubic_degree_finds_nothing():
    report = discover_vanishing(2, 1, 3, seed=1)
    assert report.nullspace.null_dim == 0
    assert report.candidates == []


@pytest.mark.parametrize("d", [2, 3])
def test_discover_degree_five_dimension_law(d):
    # degree-<=5 members are exactly (linear) * relation: dimension d + 2
    report = discover_vanishing(d, 1, 5, seed=1)
    assert report.nullspace.null_dim == d + 2
    assert len(report.candidates) == d + 2
    relation = distance_relation(d, 1)
    for candidate in report.candidates:
        assert candidate.certificate == CERT_DIVISIBLE
        assert divide_last_variable(candidate.poly, relation).remainder.is_zero


def test_discover_segment_case():
    report = discover_vanishing(1, 1, 3, seed=1)
    (candidate,) = report.candidates
    assert candidate.certificate == CERT_DIVISIBLE
    assert proportional(candidate.poly, segment_generator(1))


def test_discover_segment_needs_rational_edge():
    with pytest.raises(ValueError):
        discover_vanishing(1, 2, 3)  # sqrt(2) edge cannot be certified


def test_discover_nonunit_edge():
    report = discover_vanishing(2, Fraction(4, 9), 4, seed=5)
    (candidate,) = report.candidates
    assert candidate.certificate == CERT_DIVISIBLE
    assert proportional(candidate.poly, distance_relation(2, Fraction(4, 9)))


def test_discover_deterministic():
    a = discover_vanishing(2, 1, 4, seed=9)
    b = discover_vanishing(2, 1, 4, seed=9)
    assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(b.to_json(), sort_keys=True)


def test_discover_validates_input():
    with pytest.raises(ValueError):
        discover_vanishing(0, 1, 4)
    with pytest.raises(ValueError):
        discover_vanishing(2, 1, 0)


def test_discover_sample_count_defaults_to_thrice_basis():
    report = discover_vanishing(2, 1, 3, seed=0)
    assert report.config["n_samples"] == 3 * math.comb(3 + 3, 3)
    custom = discover_vanishing(2, 1, 3, seed=0, n_samples=150)
    assert custom.config["n_samples"] == 150


# -- independence ---------------------------------------------------------------------------


@pytest.mark.parametrize("subset", [(1, 2), (1, 3), (2, 3)])
def test_independence_d2_pairs(subset):
    report = independence_test(2, 1, subset, 6, seed=5)
    assert report.verdict == "no-relation-found"
    assert report.nullspace.gap > 1e3


def test_independence_d3_triple_low_degree():
    report = independence_test(3, 1, (1, 2, 3), 4, seed=5)
    assert report.verdict == "no-relation-found"


def test_independence_rejects_full_set():
    with pytest.raises(ValueError):
        independence_test(2, 1, (1, 2, 3), 4)


def test_independence_rejects_bad_labels():
    with pytest.raises(ValueError):
        independence_test(2, 1, (0, 1), 4)
    with pytest.raises(ValueError):
        independence_test(2, 1, (1, 1), 4)
    with pytest.raises(ValueError):
        independence_test(2, 1, (), 4)


# -- circumsphere discovery ------------------------------------------------------------------


def test_sphere_degree_two_finds_quadratic():
    report = discover_on_sphere(2, 1, 2, seed=3)
    assert report.null_dim_by_degree == {1: 0, 2: 1}
    (candidate,) = report.certified
    assert candidate.certificate == CERT_SPHERE_IDEAL
    assert proportional(candidate.poly, circumsphere_quadratic(2, 1))
    assert report.extras == []


def test_sphere_degree_one_empty():
    report = discover_on_sphere(2, 1, 1, seed=3)
    assert report.nullspace.null_dim == 0
    assert report.certified == [] and report.extras == []


def test_sphere_degree_two_d3():
    report = discover_on_sphere(3, 1, 2, seed=3)
    (candidate,) = report.certified
    assert proportional(candidate.poly, circumsphere_quadratic(3, 1))


def test_sphere_rejects_low_dimension():
    with pytest.raises(ValueError):
        discover_on_sphere(1, 1, 2)


def test_sphere_ideal_membership_is_complete():
    quad = circumsphere_quadratic(2, 1)
    rel = distance_relation(2, 1)
    quart = circumsphere_quartic(2, 1)
    t1 = MultiPoly.variable(0, 3)
    assert _in_sphere_ideal(quad, quad, rel)
    assert _in_sphere_ideal(rel, quad, rel)
    # the other circumsphere quartic is generated by the two, by the exact
    # polynomial identity linking the three
    assert _in_sphere_ideal(quart, quad, rel)
    assert _in_sphere_ideal(quad * t1 + rel * (t1**2), quad, rel)
    assert not _in_sphere_ideal(t1, quad, rel)


def test_sphere_degree_four_certifies_quartic_span():
    # on the circumcircle of a triangle the vanishing ideal is larger than
    # the two-generator ideal (a cubic of Pompeiu type also vanishes), so
    # the run reports extras; the certified part must still be genuine
    report = discover_on_sphere(2, 1, 4, seed=3)
    assert report.null_dim_by_degree[2] == 1
    assert report.null_dim_by_degree[4] >= 11  # 10 quadratic multiples + the relation
    quad = circumsphere_quadratic(2, 1)
    rel = distance_relation(2, 1)
    for candidate in report.certified:
        assert _in_sphere_ideal(candidate.poly, quad, rel)
    assert report.extras  # the Pompeiu-type directions


def test_pompeiu_cubic_vanishes_on_circle_but_outside_ideal():
    t1, t2, t3 = (MultiPoly.variable(i, 3) for i in range(3))
    pompeiu = (t1 + t2 - t3) * (t1 - t2 + t3) * (t2 + t3 - t1)
    quad = circumsphere_quadratic(2, 1)
    rel = distance_relation(2, 1)
    assert not _in_sphere_ideal(pompeiu, quad, rel)
    from simplexdist.geom import CartesianSimplex, sample_circumsphere

    simplex = CartesianSimplex.build(2, 1.0)
    points = sample_circumsphere(simplex, SampleConfig(seed=8, count=40))
    values = [pompeiu.eval_float(simplex.distances(p)) for p in points]
    assert max(abs(v) for v in values) < 1e-12


def test_sphere_deterministic():
    a = discover_on_sphere(2, 1, 3, seed=4)
    b = discover_on_sphere(2, 1, 3, seed=4)
    assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(b.to_json(), sort_keys=True)


# -- report serialization ----------------------------------------------------------------------


def test_discovery_report_json_round_trips_through_dumps():
    report = discover_vanishing(2, 1, 4, seed=1)
    doc = report.to_json()
    text = json.dumps(doc, sort_keys=True)
    parsed = json.loads(text)
    assert parsed["nullspace"]["null_dim"] == 1
    assert parsed["config"]["d"] == 2
    assert parsed["candidates"][0]["certificate"] == CERT_DIVISIBLE
