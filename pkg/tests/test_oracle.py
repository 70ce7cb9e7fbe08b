"""Tests pinning the closed forms to their brute-force oracles."""

import random
from fractions import Fraction

import numpy as np
import pytest

from stitchlab.cycloid import ORACLE_TOL, tangency_point
from stitchlab.dances import PlanetDance
from stitchlab.oracle import (
    VerificationReport,
    brute_intersections,
    brute_minimal_norms,
    brute_nearest,
    brute_tangency,
    reduced_dances,
    verify_all,
)
from stitchlab.torusgeo import intersection_count, shortest_sample_vector


def test_brute_nearest_known_cases():
    assert brute_nearest(206, 35) == (6, 4)
    assert brute_nearest(207, 35) == (6, 3)
    assert brute_nearest(100, 34) == (3, 2)
    assert brute_nearest(50, 25) == (2, 0)
    assert brute_nearest(1, 0) == (1, 0)


def test_brute_nearest_agrees_with_search():
    # full vector agreement, tie-breaks included
    for m in range(1, 80):
        for a in range(m):
            assert brute_nearest(m, a) == shortest_sample_vector(m, a)


def test_brute_minimal_norms():
    for m in (1, 2, 9, 37, 100):
        norms = brute_minimal_norms(m)
        for a in range(m):
            p, q = brute_nearest(m, a)
            assert p * p + q * q == int(norms[a])


def test_brute_intersections_counts():
    assert brute_intersections(PlanetDance(1, 2), PlanetDance(3, 2)) == 4
    assert brute_intersections(PlanetDance(1, 0), PlanetDance(0, 1)) == 1
    assert brute_intersections(PlanetDance(3, 2), PlanetDance(3, 2)) is None


def test_brute_intersections_validation():
    with pytest.raises(ValueError):
        brute_intersections(PlanetDance(6, 4), PlanetDance(1, 0))


def test_intersection_formula_small_range():
    dances = reduced_dances(3)
    for i, (a1, b1) in enumerate(dances):
        for a2, b2 in dances[i:]:
            formula = intersection_count(PlanetDance(a1, b1), PlanetDance(a2, b2))
            brute = brute_intersections(PlanetDance(a1, b1), PlanetDance(a2, b2))
            assert formula == (0 if brute is None else brute)


def test_brute_tangency_matches_formula():
    rng = random.Random(20260826)
    pool = [(a, b) for a, b in reduced_dances(5) if a + b != 0 and a != b]
    for _ in range(50):
        alpha, beta = rng.choice(pool)
        s = Fraction(rng.randrange(1, 97), 97)
        d = PlanetDance(alpha, beta)
        expected = tangency_point(d, s)
        found = brute_tangency(d, s)
        assert expected is not None and found is not None
        assert np.hypot(found[0] - expected[0],
                        found[1] - expected[1]) < ORACLE_TOL


def test_brute_tangency_degenerate_chord():
    assert brute_tangency(PlanetDance(3, 2), Fraction(0)) is None
    with pytest.raises(ValueError):
        brute_tangency(PlanetDance(1, -1), Fraction(1, 7))


def test_reduced_dances_contents():
    dances = reduced_dances(2)
    assert (0, 1) in dances
    assert (1, -2) in dances
    assert (2, 2) not in dances
    assert all(PlanetDance(a, b).reduced for a, b in dances)


def test_verify_all_trivial_bounds():
    reports = verify_all(1, 1)
    assert all(isinstance(r, VerificationReport) for r in reports)
    assert all(r.passed for r in reports)
    assert [r.suite for r in reports] == sorted(r.suite for r in reports)


def test_verify_all_moderate_bounds():
    reports = verify_all(20, 3)
    assert all(r.passed for r in reports)
    by_name = {r.suite: r for r in reports}
    assert by_name["stitch_sampling_correspondence"].cases_run > 0
    assert by_name["shortest_vector"].cases_run == sum(range(1, 21))


def test_verify_all_validation():
    with pytest.raises(ValueError):
        verify_all(0, 1)
