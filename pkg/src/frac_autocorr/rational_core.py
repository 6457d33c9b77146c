"""Exact rational arithmetic, Farey sequences, exact floor/fractional part.

Rationals are plain ``fractions.Fraction`` values: always reduced, positive
denominator, arbitrary-precision integers, exact field operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator


@dataclass(frozen=True)
class FareyScanRecord:
    """One row of a Farey sweep: the fraction p/q and the sampled value."""

    p: int
    q: int
    lam: float
    a_value: float


def reduce(num: int, den: int) -> Fraction:
    """Reduced fraction with positive denominator; den = 0 is an error."""
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def frac_rational(x: Fraction | int) -> Fraction:
    """Exact fractional part {x} in [0, 1)."""
    x = Fraction(x)
    return x - math.floor(x)


def _farey_unit(order: int) -> Iterator[tuple[int, int]]:
    """Reduced fractions of denominator <= order in [0, 1], ascending.

    Mediant stepping from (0/1, 1/order): O(1) memory per step.
    """
    a, b, c, d = 0, 1, 1, order
    yield a, b
    while c <= order:
        k = (order + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        yield a, b


def farey_sequence(order: int, lo: Fraction | int = 0, hi: Fraction | int = 1) -> list[Fraction]:
    """All reduced fractions with denominator <= order in [lo, hi], ascending.

    For lo = 0, hi = 1 consecutive terms a/b, c/d satisfy bc - ad = 1.
    """
    if order < 1:
        raise ValueError("farey_sequence requires order >= 1")
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise ValueError("farey_sequence requires lo < hi")
    out: list[Fraction] = []
    for base in range(math.floor(lo), math.floor(hi) + 1):
        for p, q in _farey_unit(order):
            if p == q and base + 1 <= math.floor(hi):
                continue  # integer endpoint reappears as 0/1 of the next cell
            f = Fraction(base * q + p, q)
            if lo <= f <= hi:
                out.append(f)
    return out
