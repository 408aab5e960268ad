"""Local Euler factors and Hodge-Tate bookkeeping for Sym^3 of a weight-k form."""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass

import mpmath

from ..errors import InvalidWeightError


@dataclass(frozen=True)
class Sym3EulerFactor:
    """P(X) = det(1 - Sym^3(Frob_l) X) = sum c_i X^i with exact integer c_i."""

    prime: int
    weight: int
    coefficients: tuple

    @property
    def q(self) -> int:
        return self.prime ** (self.weight - 1)

    def inverse_series(self, depth: int) -> list[int]:
        """Coefficients of 1/P(X) through X^depth (these are the b_{l^r})."""
        c = self.coefficients
        inv = [1] + [0] * depth
        for m in range(1, depth + 1):
            inv[m] = -sum(c[i] * inv[m - i] for i in range(1, min(4, m) + 1))
        return inv

    def numeric_roots(self, dps: int = 50):
        """Inverse roots of P, i.e. the four Satake products alpha^i beta^(3-i)."""
        with mpmath.workdps(dps):
            poly = [mpmath.mpf(x) for x in self.coefficients]  # P(X) = sum c_i X^i
            # Inverse roots of P are the roots of X^4 P(1/X) = c_0 X^4 + ... + c_4.
            return mpmath.polyroots(poly, maxsteps=200, extraprec=4 * dps)


def euler_factor_sym3(ell: int, a: int, k: int) -> Sym3EulerFactor:
    """Local factor of L(Sym^3 f, s) at an unramified prime with a_l = a.

    With q = l^(k-1) and alpha + beta = a, alpha*beta = q the inverse roots are
    alpha^3, alpha^2 beta, alpha beta^2, beta^3, whose elementary symmetric
    functions are e1 = a^3 - 2qa, e2 = q a^4 - 3 q^2 a^2 + 2 q^3, e3 = q^3 e1, e4 = q^6.
    """
    q = ell ** (k - 1)
    if a * a > 4 * q:
        warnings.warn(
            f"a = {a} violates the Ramanujan bound at l = {ell}, k = {k}; Satake pair is not conjugate",
            RuntimeWarning,
            stacklevel=2,
        )
    e1 = a**3 - 2 * q * a
    e2 = q * a**4 - 3 * q**2 * a**2 + 2 * q**3
    e3 = q**3 * e1
    e4 = q**6
    return Sym3EulerFactor(ell, k, (1, -e1, e2, -e3, e4))


def euler_factor_numeric(ell: int, a: int, k: int, dps: int = 60):
    """Same polynomial expanded from numerically computed Satake roots (test oracle)."""
    with mpmath.workdps(dps):
        q = mpmath.mpf(ell) ** (k - 1)
        disc = mpmath.sqrt(mpmath.mpc(a * a) - 4 * q)
        alpha = (a + disc) / 2
        beta = (a - disc) / 2
        poly = [mpmath.mpc(1)]
        for r in (alpha**3, alpha**2 * beta, alpha * beta**2, beta**3):
            nxt = poly + [mpmath.mpc(0)]
            for i in range(len(poly)):
                nxt[i + 1] -= r * poly[i]
            poly = nxt
        return poly


@dataclass(frozen=True)
class HodgeData:
    weight: int
    ht_weights: tuple
    motivic_weight: int
    critical_j_range: tuple

    def is_self_dual(self) -> bool:
        """(Sym^3 V)^* = (Sym^3 V)(3k-3) at the level of Hodge-Tate weights.

        The dual negates the weights and a Tate twist by n adds n, so the
        identity reads -h - (3k-3) = h' as multisets.
        """
        dual = Counter(-h - self.motivic_weight for h in self.ht_weights)
        return dual == Counter(self.ht_weights)

    def critical_twists(self):
        lo, hi = self.critical_j_range
        return list(range(lo, hi + 1))


def hodge_data(k: int) -> HodgeData:
    if k < 2 or k % 2:
        raise InvalidWeightError(f"Hodge data needs even k >= 2, got {k}")
    return HodgeData(
        weight=k,
        ht_weights=(3 - 3 * k, 2 - 2 * k, 1 - k, 0),
        motivic_weight=3 * k - 3,
        critical_j_range=(k, 2 * k - 2),
    )
