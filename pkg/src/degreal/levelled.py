"""Fill function, its inverse, and levelled sequences of a given volume.

Picture each interval [a_i, b_i] as a closed vessel and pour in fluid up to
height l. ``F(l)`` is the amount poured:

    F(l) = sum_i (min(l, b_i) - min(l, a_i))

A levelled sequence of volume L takes d_i = b_i where b_i <= l, d_i = a_i
where a_i >= l, and floor(l) or ceil(l) elsewhere, with exactly
F(l) - F(floor(l)) entries at ceil(l), where l is the smallest level with
F(l) = L.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import backend
from .core import IntervalSequence, as_intervals


@dataclass(frozen=True)
class LevelledSequence:
    degrees: np.ndarray
    level: Fraction
    volume: int


def slopes(S) -> np.ndarray:
    """Q[k] = #{i : a_i < k <= b_i} for k = 0..n-1, via the bound histograms."""
    S = as_intervals(S)
    n = S.n
    ha = np.bincount(S.lower, minlength=n)
    hb = np.bincount(S.upper, minlength=n)
    q = np.zeros(n, dtype=np.int64)
    q[1:] = np.cumsum(ha[: n - 1] - hb[: n - 1])
    return q


def f_value(S, level) -> Fraction:
    """Exact F(level); ``level`` may be an int or a Fraction in [0, n-1]."""
    S = as_intervals(S)
    level = Fraction(level)
    if not 0 <= level <= S.n - 1:
        raise ValueError(f"level {level} outside [0, {S.n - 1}]")
    whole = level.numerator // level.denominator
    q = slopes(S)
    total = Fraction(int(q[1 : whole + 1].sum()))
    if level != whole:
        total += (level - whole) * int(q[whole + 1])
    return total


def _fill(S: IntervalSequence, volume: int):
    if not 0 <= volume <= S.width():
        return None
    return backend.kernels().levelled(S.lower, S.upper, volume)


def fill_level(S, volume: int) -> Fraction:
    """Smallest level l >= 0 with F(l) = volume."""
    S = as_intervals(S)
    out = _fill(S, int(volume))
    if out is None:
        raise ValueError(f"volume {volume} outside [0, {S.width()}]")
    _, f, rem, slope = out
    return Fraction(int(f)) + Fraction(int(rem), int(slope))


def levelled_sequence(S, volume: int) -> Optional[LevelledSequence]:
    """Levelled sequence of the given volume, or None when out of range.

    Entries at ceil(l) go to the lowest eligible positions.
    """
    S = as_intervals(S)
    volume = int(volume)
    out = _fill(S, volume)
    if out is None:
        return None
    d, f, rem, slope = out
    return LevelledSequence(d, Fraction(int(f)) + Fraction(int(rem), int(slope)), volume)


def levelled_degrees(lower: np.ndarray, upper: np.ndarray, volume: int) -> np.ndarray:
    """Hot-path variant on raw arrays, no validation."""
    return backend.kernels().levelled(lower, upper, volume)[0]
