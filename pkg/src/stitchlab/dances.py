"""Modular stitch graphs, planet dances, and their discrete samplings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .kernel import ChordSet, DirectedChord, check_input_size, wrap


@dataclass(frozen=True)
class PlanetDance:
    """A pair of integer orbital speeds.

    The chord family traced by speeds (alpha, beta) equals the one traced
    by (-alpha, -beta), so construction flips signs into the canonical
    orientation alpha >= 0 (and beta >= 0 when alpha is zero).
    """

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        check_input_size(self.alpha, self.beta)
        if self.alpha < 0 or (self.alpha == 0 and self.beta < 0):
            object.__setattr__(self, "alpha", -self.alpha)
            object.__setattr__(self, "beta", -self.beta)

    @property
    def reduced(self) -> bool:
        return gcd(abs(self.alpha), abs(self.beta)) == 1 or (
            self.alpha == 0 and self.beta == 0
        )


@dataclass(frozen=True)
class StitchGraph:
    """Chord pattern parameters: modulus m and multiplier a.

    The multiplier is normalized into [0, m) at construction; congruent
    multipliers give the same set of chords.
    """

    m: int
    a: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"modulus must be positive, got {self.m}")
        check_input_size(self.m, self.a)
        object.__setattr__(self, "a", self.a % self.m)


@dataclass(frozen=True)
class Sampling:
    """A planet dance together with a positive sampling rate."""

    dance: PlanetDance
    rate: int

    def __post_init__(self) -> None:
        if self.rate < 1:
            raise ValueError(f"sampling rate must be positive, got {self.rate}")
        check_input_size(self.rate)


def mmt_chords(g: StitchGraph) -> ChordSet:
    """All m chords of the graph: index k runs from k/m to (a*k mod m)/m."""
    m, a = g.m, g.a
    return ChordSet(
        DirectedChord(wrap(Fraction(k, m)), wrap(Fraction(a * k, m)))
        for k in range(m)
    )


def dance_chord(d: PlanetDance, t: Fraction) -> DirectedChord:
    """The chord of the dance at time t: from alpha*t to beta*t (mod 1)."""
    return DirectedChord(wrap(d.alpha * Fraction(t)), wrap(d.beta * Fraction(t)))


def sample(s: Sampling) -> ChordSet:
    """The canonical chord set of the dance at times k/rate, k = 0..rate-1."""
    return ChordSet(
        dance_chord(s.dance, Fraction(k, s.rate)) for k in range(s.rate)
    )


def sample_dance(alpha: int, beta: int, m: int) -> ChordSet:
    """Convenience wrapper: the m-sampling of the dance (alpha, beta)."""
    return sample(Sampling(PlanetDance(alpha, beta), m))


def reduce_dance(d: PlanetDance) -> PlanetDance:
    """Divide out the gcd of the speeds; (0, 0) stays as is."""
    g = gcd(abs(d.alpha), abs(d.beta))
    if g <= 1:
        return PlanetDance(d.alpha, d.beta)
    return PlanetDance(d.alpha // g, d.beta // g)


def dance_sign(d: PlanetDance) -> str:
    """Classify the speed pair: positive, negative, axial, or null.

    Positive and negative follow the sign of alpha*beta; a single zero
    speed is "axial" and the motionless pair (0, 0) is "null".
    """
    p = d.alpha * d.beta
    if p > 0:
        return "positive"
    if p < 0:
        return "negative"
    if d.alpha == 0 and d.beta == 0:
        return "null"
    return "axial"


def sample_pairs(alpha: int, beta: int, m: int) -> np.ndarray:
    """Integer form of an m-sampling, for exhaustive sweeps.

    Returns the sorted unique (k*alpha mod m, k*beta mod m) pairs as an
    (n, 2) int64 array.  Over the common denominator m this is an exact
    encoding of the canonical chord set; a consistency test pins it to
    :func:`sample`.
    """
    k = np.arange(m, dtype=np.int64)
    pairs = np.column_stack(((alpha * k) % m, (beta * k) % m))
    return np.unique(pairs, axis=0)
