"""Rational reconstruction of real balls by continued fractions."""

from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mpf

from .ball import ErrorBall

MAX_INPUT_RADIUS = mpf(10) ** -20
ACCEPT_FACTOR = 10**5


def exact_fraction(x) -> Fraction:
    """The exact binary value of an mpf as a Fraction."""
    if not isinstance(x, mpf):
        x = mpmath.mpmathify(x)
    if not mpmath.isfinite(x):
        raise ValueError("non-finite value")
    sign, man, exp, _ = x._mpf_
    if not man:
        return Fraction(0)
    val = Fraction(int(man)) * (Fraction(2) ** int(exp))
    return -val if sign else val


def convergents(x: Fraction):
    """Continued-fraction convergents p/q of x, in order."""
    p0, q0, p1, q1 = 0, 1, 1, 0
    while True:
        a = x.numerator // x.denominator
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        yield Fraction(p1, q1)
        frac = x - a
        if frac == 0:
            return
        x = 1 / frac


def rationalize(ball: ErrorBall, max_height: int = 10**20) -> Fraction | None:
    """First convergent p/q (q <= max_height) within radius * 10^5 of the midpoint.

    Returns None when the ball is too wide (radius >= 1e-20), has a nonzero
    imaginary part beyond its radius, or no convergent qualifies.
    """
    if ball.rad >= MAX_INPUT_RADIUS:
        return None
    if abs(ball.mid.imag) > ball.rad:
        return None
    x = exact_fraction(ball.mid.real)
    tol = exact_fraction(ball.rad) * ACCEPT_FACTOR
    if abs(x) <= tol:
        return Fraction(0)
    for c in convergents(x):
        if c.denominator > max_height:
            return None
        if abs(x - c) < tol:
            return c
    return None
