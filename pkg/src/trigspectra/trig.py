"""Circular functions of rational multiples of pi.

All angles handled here have the form pi * num/den with integer num, den.
Range reduction is done on the exact fraction before any floating-point
multiplication by pi, so

  * lattice points come out exact: sin and cos are exactly 0.0, 1.0 or -1.0
    at multiples of pi/2, and cot is exactly 0.0 at odd multiples of pi/2;
  * the reflection symmetries are bitwise: sin_rational_pi(den - num, den)
    equals sin_rational_pi(num, den) bit for bit, and cot_rational_pi flips
    only its sign bit under num -> den - num.

The bitwise symmetry is what lets the matrix builders produce exactly
Hermitian circulant matrices and lets paired summation cancel exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = ["sin_rational_pi", "cos_rational_pi", "cot_rational_pi"]

_HALF = Fraction(1, 2)


def sin_rational_pi(num: int, den: int) -> float:
    """sin(pi * num/den), reduced exactly to a first-quadrant angle."""
    if den <= 0:
        raise ValueError(f"denominator must be positive, got {den}")
    t = Fraction(num, den) % 2
    sign = 1.0
    if t > 1:
        sign, t = -1.0, t - 1
    if t > _HALF:
        t = 1 - t
    if t == 0:
        return 0.0
    if t == _HALF:
        return sign
    return sign * math.sin(math.pi * t.numerator / t.denominator)


def cos_rational_pi(num: int, den: int) -> float:
    """cos(pi * num/den) via the quarter-period shift of the sine."""
    return sin_rational_pi(2 * num + den, 2 * den)


def cot_rational_pi(num: int, den: int) -> float:
    """cot(pi * num/den); raises at the poles (integer multiples of pi)."""
    if den <= 0:
        raise ValueError(f"denominator must be positive, got {den}")
    t = Fraction(num, den) % 1
    if t == 0:
        raise ValueError(f"cot(pi * {num}/{den}) is singular")
    return cos_rational_pi(t.numerator, t.denominator) / sin_rational_pi(
        t.numerator, t.denominator
    )
