"""Level-1 Eisenstein series, the discriminant form, and Hecke eigenforms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import mpmath
from sympy import isprime

from ..errors import (
    InsufficientPrecisionError,
    InvalidWeightError,
    NotPrimeError,
    UnsupportedWeightError,
)
from .qexp import QExpansion, series_mul

SUPPORTED_WEIGHTS = (12, 16, 18, 20, 22, 26)


def divisor_sigma_table(power: int, n_max: int) -> list[int]:
    """``[sigma_power(n) for n in 0..n_max]`` by a divisor sieve (entry 0 is 0)."""
    table = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        dp = d**power
        for m in range(d, n_max + 1, d):
            table[m] += dp
    return table


def cusp_space_dimension(k: int) -> int:
    """Dimension of S_k(SL_2(Z))."""
    if k % 2 or k < 12:
        return 0
    return k // 12 - (1 if k % 12 == 2 else 0)


def eisenstein_series(weight: int, n_terms: int) -> QExpansion:
    """E_w = 1 - (2w/B_w) * sum sigma_{w-1}(n) q^n, exact through q^n_terms."""
    if weight % 2 or weight < 4:
        raise InvalidWeightError(f"Eisenstein series need even weight >= 4, got {weight}")
    if n_terms < 0:
        raise ValueError("n_terms must be non-negative")
    num, den = mpmath.bernfrac(weight)
    factor = -Fraction(2 * weight) / Fraction(int(num), int(den))
    if factor.denominator == 1:
        factor = factor.numerator
    sig = divisor_sigma_table(weight - 1, n_terms)
    return QExpansion(weight, [1] + [factor * sig[n] for n in range(1, n_terms + 1)])


def delta(n_terms: int) -> QExpansion:
    """The discriminant form (E_4^3 - E_6^2)/1728."""
    if n_terms < 1:
        raise ValueError("delta needs n_terms >= 1")
    e4 = eisenstein_series(4, n_terms)
    e6 = eisenstein_series(6, n_terms)
    return (e4 * e4 * e4 - e6 * e6).exact_div(1728)


def euler_product_series(n_terms: int) -> list[int]:
    """Coefficients of prod_{n>=1} (1 - q^n) through q^n_terms (pentagonal numbers)."""
    out = [0] * (n_terms + 1)
    m = 0
    while True:
        sign = -1 if m % 2 else 1
        g1 = m * (3 * m - 1) // 2
        g2 = m * (3 * m + 1) // 2
        if g1 > n_terms:
            break
        out[g1] += sign
        if m and g2 <= n_terms:
            out[g2] += sign
        m += 1
    return out


def delta_eta(n_terms: int) -> QExpansion:
    """The discriminant form as q * prod (1 - q^n)^24, independent of Eisenstein series."""
    if n_terms < 1:
        raise ValueError("delta_eta needs n_terms >= 1")
    n = n_terms  # the leading q shifts indices by one
    e1 = euler_product_series(n)
    e2 = series_mul(e1, e1, n)
    e3 = series_mul(e2, e1, n)
    e6 = series_mul(e3, e3, n)
    e12 = series_mul(e6, e6, n)
    e24 = series_mul(e12, e12, n)
    return QExpansion(12, [0] + e24[:n])


@dataclass(frozen=True)
class Eigenform:
    """Normalized Hecke eigenform of level 1 with rational coefficients.

    ``coefficients[n]`` is a_n for 0 <= n <= precision (a_0 = 0).
    """

    weight: int
    coefficients: tuple
    level: int = 1

    @property
    def precision(self) -> int:
        return len(self.coefficients) - 1

    def a(self, n: int) -> int:
        if n < 1:
            raise IndexError(n)
        if n > self.precision:
            raise InsufficientPrecisionError(
                f"a_{n} not computed (precision {self.precision})", needed=n, available=self.precision
            )
        return self.coefficients[n]

    def as_qexpansion(self) -> QExpansion:
        return QExpansion(self.weight, self.coefficients)

    def with_coefficient(self, n: int, value: int) -> Eigenform:
        """Copy with a_n replaced; used for fault-injection tests."""
        c = list(self.coefficients)
        c[n] = value
        return Eigenform(self.weight, tuple(c), self.level)


def check_supported_weight(k: int) -> None:
    if k not in SUPPORTED_WEIGHTS:
        dim = cusp_space_dimension(k)
        raise UnsupportedWeightError(
            f"weight {k}: dim S_{k}(SL2(Z)) = {dim}; only weights with a one-dimensional "
            f"cusp space {SUPPORTED_WEIGHTS} are supported (two-dimensional and larger "
            "spaces would need eigenvectors over a number field)"
        )


def eigenform(k: int, n_terms: int) -> Eigenform:
    """The unique normalized cusp form Delta * E_{k-12} of weight k."""
    check_supported_weight(k)
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    d = delta(n_terms)
    f = d if k == 12 else d * eisenstein_series(k - 12, n_terms)
    if not f.is_integral() or f[1] != 1:
        raise ArithmeticError(f"weight {k} product is not a normalized integral form")
    return Eigenform(k, f.terms)


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise NotPrimeError(f"{p} is not prime")


def is_ordinary(f: Eigenform, p: int) -> bool:
    """True iff p does not divide a_p."""
    _require_prime(p)
    return f.a(p) % p != 0


def verify_multiplicativity(f: Eigenform, bound: int) -> bool:
    """Check a_1 = 1, a_mn = a_m a_n for coprime m, n, and the prime-power recursion up to ``bound``."""
    if bound > f.precision:
        raise InsufficientPrecisionError(
            f"bound {bound} exceeds precision {f.precision}", needed=bound, available=f.precision
        )
    if bound < 1:
        return True
    c = f.coefficients
    if c[1] != 1:
        return False
    for m in range(2, bound + 1):
        for n in range(m + 1, bound // m + 1):
            if gcd(m, n) == 1 and c[m * n] != c[m] * c[n]:
                return False
    k1 = f.weight - 1
    for ell in range(2, bound + 1):
        if not isprime(ell):
            continue
        q = ell**k1
        prev, cur, power = 1, c[ell], ell
        while power * ell <= bound:
            nxt = c[ell] * cur - q * prev
            if c[power * ell] != nxt:
                return False
            prev, cur, power = cur, nxt, power * ell
    return True


def satisfies_ramanujan_bound(f: Eigenform, bound: int) -> bool:
    """a_l^2 <= 4 l^(k-1) for every prime l <= bound."""
    k1 = f.weight - 1
    return all(
        f.a(ell) ** 2 <= 4 * ell**k1 for ell in range(2, min(bound, f.precision) + 1) if isprime(ell)
    )
