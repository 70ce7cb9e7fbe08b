"""Exact rational arithmetic and the primitive geometric vocabulary.

Positions on the circle are measured in full turns and kept as exact
fractions end to end.  Floating point only enters through :func:`embed`,
which maps a circle position to plane coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

#: Inputs (modulus, multiplier, dance speeds) are capped so intermediate
#: integer products stay far below anything that could silently misbehave
#: in vectorized int64 code paths.
MAX_INPUT = 10**6

Rational = Fraction

HALF = Fraction(1, 2)


def check_input_size(*values: int) -> None:
    """Reject integers whose magnitude exceeds the desk-scale cap."""
    for v in values:
        if abs(v) > MAX_INPUT:
            raise ValueError(f"integer input {v} exceeds the cap {MAX_INPUT}")


def reduce(num: int, den: int) -> Fraction:
    """Return the reduced fraction num/den with positive denominator."""
    if den == 0:
        raise ValueError("zero denominator")
    return Fraction(num, den)


@dataclass(frozen=True, order=True)
class CirclePoint:
    """A position on the unit circle, measured in turns, in [0, 1)."""

    turn: Fraction

    def __post_init__(self) -> None:
        if not (0 <= self.turn < 1):
            raise ValueError(f"circle position {self.turn} outside [0, 1)")


@dataclass(frozen=True)
class TorusPoint:
    """A point of the flat torus: a pair of circle positions."""

    x: CirclePoint
    y: CirclePoint


@dataclass(frozen=True, order=True)
class DirectedChord:
    """An ordered pair of circle points.

    A chord with coincident endpoints is degenerate; it is kept as data
    (it marks a sample where both ends agree) but drawn as a dot and
    skipped by tangency checks.
    """

    start: CirclePoint
    end: CirclePoint

    @property
    def degenerate(self) -> bool:
        return self.start == self.end


class ChordSet:
    """A canonical finite set of directed chords.

    Construction sorts lexicographically by (start, end) and removes
    duplicates, so two ChordSets are equal exactly when they contain the
    same chords, regardless of input order.
    """

    __slots__ = ("chords",)

    def __init__(self, chords: Iterable[DirectedChord]):
        seen = sorted(set(chords), key=lambda c: (c.start.turn, c.end.turn))
        object.__setattr__(self, "chords", tuple(seen))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("ChordSet is immutable")

    def __len__(self) -> int:
        return len(self.chords)

    def __iter__(self) -> Iterator[DirectedChord]:
        return iter(self.chords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChordSet):
            return NotImplemented
        return self.chords == other.chords

    def __hash__(self) -> int:
        return hash(self.chords)

    def __repr__(self) -> str:
        return f"ChordSet({len(self.chords)} chords)"


def wrap(r: Fraction | int) -> CirclePoint:
    """Reduce a rational position modulo one full turn into [0, 1)."""
    return CirclePoint(Fraction(r) % 1)


def centered_lift(p: CirclePoint) -> Fraction:
    """The representative of p in (-1/2, 1/2].

    Its absolute value is the circle distance from p to position 0.  The
    boundary 1/2 maps to +1/2 so tie cases are deterministic.
    """
    return p.turn if p.turn <= HALF else p.turn - 1


def embed(p: CirclePoint) -> tuple[float, float]:
    """Plane coordinates (cos 2*pi*t, sin 2*pi*t) of a circle position."""
    angle = 2.0 * math.pi * float(p.turn)
    return (math.cos(angle), math.sin(angle))
