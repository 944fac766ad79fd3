"""Certified rational enclosures for ln, exp, and related thresholds.

Every transcendental quantity used in a precondition or acceptance check is
replaced by an exact rational interval with directed rounding; callers pick
the conservative endpoint so a guarantee is never accepted by rounding luck.
"""

from __future__ import annotations

from fractions import Fraction

_GRID = 10 ** 45  # directed-rounding grid; keeps denominators bounded


def _round_down(x: Fraction) -> Fraction:
    return Fraction(x.numerator * _GRID // x.denominator, _GRID)


def _round_up(x: Fraction) -> Fraction:
    return Fraction(-((-x.numerator) * _GRID // x.denominator), _GRID)


def _atanh_series(u: Fraction, terms: int) -> tuple[Fraction, Fraction]:
    """Enclosure of 2*atanh(u) for 0 <= u < 1 via the odd power series."""
    total = Fraction(0)
    power = u
    u2 = u * u
    for i in range(terms):
        total += power / (2 * i + 1)
        power *= u2
    lo = 2 * total
    # remainder of the tail, bounded by a geometric series
    rem = 2 * power / ((2 * terms + 1) * (1 - u2))
    return _round_down(lo), _round_up(lo + rem)


_LN2_LO, _LN2_HI = _atanh_series(Fraction(1, 3), 30)


def ln_bounds(z: Fraction) -> tuple[Fraction, Fraction]:
    """Exact rational (lo, hi) with lo <= ln(z) <= hi, for z > 0."""
    z = Fraction(z)
    if z <= 0:
        raise ValueError("ln requires a positive argument")
    if z < 1:
        lo, hi = ln_bounds(1 / z)
        return -hi, -lo
    m = 0
    while z > 2:
        z /= 2
        m += 1
    u = (z - 1) / (z + 1)
    lo, hi = _atanh_series(u, 30)
    return _round_down(m * _LN2_LO + lo), _round_up(m * _LN2_HI + hi)


def exp_bounds(q: Fraction) -> tuple[Fraction, Fraction]:
    """Exact rational (lo, hi) with lo <= exp(q) <= hi."""
    q = Fraction(q)
    if q < 0:
        lo, hi = exp_bounds(-q)
        return _round_down(1 / hi), _round_up(1 / lo)
    m = 0
    while q > Fraction(1, 2):
        q /= 2
        m += 1
    total = Fraction(1)
    term = Fraction(1)
    terms = 25
    for i in range(1, terms + 1):
        term = term * q / i
        total += term
    # tail is dominated by a geometric series with ratio q < 1
    rem = term * q / (1 - q)
    lo, hi = _round_down(total), _round_up(total + rem)
    for _ in range(m):
        lo, hi = _round_down(lo * lo), _round_up(hi * hi)
    return lo, hi


def ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def floor_fraction(x: Fraction) -> int:
    return x.numerator // x.denominator
