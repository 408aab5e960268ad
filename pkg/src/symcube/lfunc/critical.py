"""Critical points of L(Sym^3 f x rho, s) and their L-values."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .afe import LFunction
from .ball import ErrorBall


@dataclass(frozen=True)
class CriticalPoint:
    """s = k + j_offset; ``j_offset`` runs over 0..k-2, ``j_motivic`` over k..2k-2."""

    k: int
    j_offset: int
    parity: int  # (-1)^j_offset * rho(-1)

    @property
    def j_motivic(self) -> int:
        return self.k + self.j_offset

    @property
    def s(self) -> int:
        return self.k + self.j_offset

    @property
    def is_central(self) -> bool:
        return 2 * self.j_offset == self.k - 2

    @property
    def mirror(self) -> int:
        """j_offset of the point s -> 3k - 2 - s."""
        return self.k - 2 - self.j_offset


def critical_points(L: LFunction):
    sign = L.twist.parity
    return [CriticalPoint(L.k, j, (-1) ** j * sign) for j in range(L.k - 1)]


def complete_L(L: LFunction, s, digits: int = 30, split=1) -> ErrorBall:
    """Lambda(s) = cond^(s/2) gamma(s) L(s); needs the root number."""
    return L.complete(s, digits, split)


def critical_values(L: LFunction, digits: int = 30):
    """[(CriticalPoint, L(k + j) ball)] for j = 0..k-2.

    Points are evaluated one after another: mpmath's working precision is
    process-global, so concurrent evaluation in threads is not safe.  The
    root number must have been fixed before this call.
    """
    return [(cp, L.value(cp.s, digits)) for cp in critical_points(L)]


def functional_equation_ratio(L: LFunction, j_offset: int, digits: int = 30) -> ErrorBall:
    """Lambda(k + j) / Lambda(k + (k-2-j)); equals the root number off the centre."""
    mirror = L.k - 2 - j_offset
    with mpmath.workdps(digits + 30):
        return L.complete(L.k + j_offset, digits) / L.complete(L.k + mirror, digits)


def automorphic_to_motivic(t, k: int):
    """s with L(Sym^3, s) = L(Pi, t) under the automorphic shift w_aut = 3(k+1).

    This coordinate change sends the automorphic centre t = 1/2 to (3k+4)/2,
    three units right of the motivic centre (3k-2)/2; it is exposed as a
    record of that convention only and is not used in any computation.
    """
    return t + Fraction(3 * (k + 1), 2)


def motivic_to_unitary(s, k: int):
    """Shift sending the motivic centre (3k-2)/2 to 1/2 (reflection s -> 1 - s)."""
    return s - Fraction(3 * k - 3, 2)


def lvalues_json(values, digits: int) -> str:
    """Dump format: [{j_offset, s, re, im, radius}] with decimal strings."""
    rows = []
    for cp, ball in values:
        rows.append({"j_offset": cp.j_offset, "s": cp.s, **ball.to_dict(digits)})
    return json.dumps(rows, indent=2)
