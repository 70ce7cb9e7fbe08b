"""Tests for stitch graphs, planet dances, and samplings."""

from fractions import Fraction

import numpy as np
import pytest

from stitchlab.dances import (
    PlanetDance,
    Sampling,
    StitchGraph,
    dance_chord,
    dance_sign,
    mmt_chords,
    reduce_dance,
    sample,
    sample_dance,
    sample_pairs,
)
from stitchlab.kernel import wrap


def test_dance_canonical_orientation():
    assert PlanetDance(-3, 2) == PlanetDance(3, -2)
    assert PlanetDance(0, -1) == PlanetDance(0, 1)
    assert PlanetDance(3, 2).alpha == 3


def test_dance_reduced_flag():
    assert PlanetDance(3, 2).reduced
    assert PlanetDance(1, 0).reduced
    assert not PlanetDance(6, 4).reduced
    assert PlanetDance(0, 0).reduced


def test_stitch_graph_normalizes_multiplier():
    assert StitchGraph(12, 14).a == 2
    assert StitchGraph(12, -1).a == 11
    with pytest.raises(ValueError):
        StitchGraph(0, 1)


def test_sampling_rate_positive():
    with pytest.raises(ValueError):
        Sampling(PlanetDance(1, 2), 0)


def test_mmt_chord_count():
    # start points k/m are distinct, so the canonical set keeps all m
    for m, a in [(12, 2), (30, 2), (100, 34), (9, 6)]:
        assert len(mmt_chords(StitchGraph(m, a))) == m


def test_mmt_small_example():
    chords = mmt_chords(StitchGraph(4, 2))
    starts = {c.start.turn for c in chords}
    assert starts == {Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)}
    by_start = {c.start.turn: c.end.turn for c in chords}
    assert by_start[Fraction(3, 4)] == Fraction(1, 2)


def test_dance_chord_endpoints():
    c = dance_chord(PlanetDance(3, 2), Fraction(1, 2))
    assert c.start == wrap(Fraction(1, 2))
    assert c.end == wrap(0)


def test_multiplication_table_is_integral_sampling():
    for m, a in [(1, 0), (7, 3), (12, 2), (30, 7), (50, 25)]:
        assert mmt_chords(StitchGraph(m, a)) == sample_dance(1, a, m)


def test_sampling_periodicity_in_beta():
    # shifting the second speed by the rate leaves the sampling unchanged
    assert sample_dance(3, 2, 10) == sample_dance(3, 12, 10)
    assert sample_dance(3, 2, 10) == sample_dance(3, -8, 10)


def test_sampling_unit_invertibility():
    # multiplying both speeds by a unit mod m permutes the samples
    assert sample_dance(1, 7, 10) == sample_dance(3, 21, 10)
    # ... but not by a zero divisor
    assert sample_dance(1, 7, 10) != sample_dance(2, 14, 10)


def test_reduce_dance():
    assert reduce_dance(PlanetDance(6, 4)) == PlanetDance(3, 2)
    assert reduce_dance(PlanetDance(0, 5)) == PlanetDance(0, 1)
    assert reduce_dance(PlanetDance(0, 0)) == PlanetDance(0, 0)


def test_dance_sign():
    assert dance_sign(PlanetDance(3, 2)) == "positive"
    assert dance_sign(PlanetDance(5, -3)) == "negative"
    assert dance_sign(PlanetDance(1, 0)) == "axial"
    assert dance_sign(PlanetDance(0, 0)) == "null"


def test_sample_pairs_matches_sample():
    # the integer encoding agrees with the exact chord sets
    for alpha, beta, m in [(1, 34, 100), (3, 2, 100), (2, 1, 9), (5, -3, 17)]:
        exact = sample(Sampling(PlanetDance(alpha, beta), m))
        expected = sorted(
            (c.start.turn.numerator * (m // c.start.turn.denominator),
             c.end.turn.numerator * (m // c.end.turn.denominator))
            for c in exact
        )
        got = sample_pairs(alpha, beta, m)
        assert got.dtype == np.int64
        assert [tuple(row) for row in got] == expected
