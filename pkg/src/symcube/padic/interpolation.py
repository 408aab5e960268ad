"""Unit roots, the Euler modification factor R_p, interpolated values and congruence checks.

Only the interpolation values of the p-adic L-function are computed; the
Iwasawa-algebra element itself is not constructed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import isprime

from ..errors import CharacterError, CriticalRangeError, NotPrimeError, OrdinarityError, PairingError
from .number import INF, PAdicNumber

DEFAULT_PREC = 20
NOT_CONSTRUCTED = "the p-adic L-function (Iwasawa-algebra element) is not constructed; only its interpolation values are"
RESCALING_CAVEAT = (
    "values are rescaled by p^(-min valuation) within each parity class; the periods are fixed only up to "
    "a rational multiple per parity, so a failed congruence may reflect that choice rather than the data"
)


@dataclass(frozen=True)
class UnitRootData:
    alpha: PAdicNumber
    beta: PAdicNumber
    p: int
    k: int
    a_p: int

    def check(self) -> bool:
        """alpha + beta = a_p and alpha * beta = p^(k-1) to precision, with the expected valuations."""
        return (
            (self.alpha + self.beta).congruent(self.a_p)
            and (self.alpha * self.beta).congruent(self.p ** (self.k - 1))
            and self.alpha.valuation == 0
            and self.beta.valuation == self.k - 1
        )


def unit_root(a_p: int, k: int, p: int, prec: int = DEFAULT_PREC) -> UnitRootData:
    """Unit root of X^2 - a_p X + p^(k-1) by Newton/Hensel iteration from a_p mod p."""
    if not isprime(p):
        raise NotPrimeError(f"{p} is not prime")
    if a_p % p == 0:
        raise OrdinarityError(
            f"a_{p} = {a_p} is divisible by {p}: f is not ordinary at {p}, "
            "which the rank-0 and interpolation theorems assume"
        )
    if p <= 3:
        raise ValueError(f"p must exceed 3 (got {p})")
    q = p ** (k - 1)
    mod = p**prec
    x = a_p % p
    known = 1
    while known < prec:
        known = min(2 * known, prec)
        m = p**known
        fx = (x * x - a_p * x + q) % m
        dfx = (2 * x - a_p) % m
        x = (x - fx * pow(dfx, -1, m)) % m
    alpha = PAdicNumber(p, prec, 0, x % mod)
    beta = PAdicNumber.from_int(q, p, prec) / alpha
    return UnitRootData(alpha, beta, p, k, a_p)


def _check_range(u: UnitRootData, j: int):
    if not 0 <= j <= u.k - 2:
        raise CriticalRangeError(f"j = {j} outside the critical range 0..{u.k - 2}")


def unramified_factors(u: UnitRootData, j: int) -> list:
    """The four factors of R_p for the trivial character, with e = j + k - 1."""
    _check_range(u, j)
    p, prec = u.p, u.alpha.prec
    e = j + u.k - 1
    pe = PAdicNumber.from_int(p**e, p, prec)
    pe1 = PAdicNumber.from_int(p ** (e + 1), p, prec)
    a, b = u.alpha, u.beta
    return [
        1 - pe / a**3,
        1 - pe / (a**2 * b),
        1 - a * b**2 / pe1,
        1 - b**3 / pe1,
    ]


def ramified_factor(u: UnitRootData, j: int, m: int) -> PAdicNumber:
    """(p^(2(j+k-1)) / (alpha^5 beta))^m for a character of conductor p^m, m >= 1."""
    _check_range(u, j)
    if m < 1:
        raise CharacterError("conductor exponent 0 belongs to the unramified branch")
    base = PAdicNumber.from_int(u.p ** (2 * (j + u.k - 1)), u.p, u.alpha.prec) / (u.alpha**5 * u.beta)
    return base**m


def conductor_exponent(character, p: int) -> int:
    if character is None:
        return 0
    m = character.conductor_exponent(p)
    if m is None:
        raise CharacterError(f"character {character.label} does not have {p}-power conductor")
    return m


def euler_modification(u: UnitRootData, j: int, character=None) -> PAdicNumber:
    """R_p(Sym^3 f, rho, j) on the branch selected by the conductor of ``character``."""
    m = conductor_exponent(character, u.p)
    if m == 0:
        out = PAdicNumber.from_int(1, u.p, u.alpha.prec)
        for f in unramified_factors(u, j):
            out = out * f
        return out
    return ramified_factor(u, j, m)


@dataclass(frozen=True)
class InterpolationRecord:
    j_offset: int
    character: str
    R_p: PAdicNumber
    factorial_factor: int
    L_alg: Fraction
    Phi: PAdicNumber
    tag: str
    factors: tuple = ()
    flags: tuple = ()

    @property
    def parity(self) -> int:
        return self.j_offset % 2

    def audit(self) -> bool:
        """Re-verify Phi = j!(j+k-1)! R_p L_alg in exact rational arithmetic modulo Phi's precision."""
        expected = Fraction(self.factorial_factor) * self.R_p.lift() * self.L_alg
        if self.Phi.is_zero:
            return self.L_alg == 0 or _frac_val(expected, self.R_p.p) >= self.Phi.zero_prec
        diff = expected - self.Phi.lift()
        return diff == 0 or _frac_val(diff, self.R_p.p) >= self.Phi.abs_prec


def _frac_val(x: Fraction, p: int):
    if x == 0:
        return INF
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


def interpolated_value(u: UnitRootData, j: int, character, L_alg, tag: str) -> InterpolationRecord:
    """Phi = j! (j+k-1)! R_p L_alg with every factor kept for audit."""
    L_alg = Fraction(L_alg)
    m = conductor_exponent(character, u.p)
    r = euler_modification(u, j, character)
    factors = tuple(unramified_factors(u, j)) if m == 0 else (r,)
    fact = math.factorial(j) * math.factorial(j + u.k - 1)
    prec = u.alpha.prec
    flags = []
    emb = PAdicNumber.from_fraction(L_alg, u.p, prec)
    if not emb.is_zero and emb.valuation < 0:
        flags.append(f"L_alg has denominator divisible by {u.p} (valuation {emb.valuation})")
    phi = PAdicNumber.from_int(fact, u.p, prec) * r * emb
    label = "trivial" if character is None or character.is_trivial else character.label
    return InterpolationRecord(j, label, r, fact, L_alg, phi, tag, factors, tuple(flags))


@dataclass
class KummerReport:
    p: int
    n: int
    pair: tuple
    modulus: int
    rescale_exponent: int
    rescaled: tuple
    difference_valuation: int | float
    verdict: str
    consistent: bool
    caveats: list = field(default_factory=lambda: [RESCALING_CAVEAT, NOT_CONSTRUCTED])
    audit: dict = field(default_factory=dict)


def kummer_experiment(records, p: int, n: int, pair: tuple) -> KummerReport:
    """Compare rescaled interpolation values at j, j' with j = j' mod (p-1) p^(n-1)."""
    by_j = {r.j_offset: r for r in records}
    j1, j2 = pair
    if j1 not in by_j or j2 not in by_j:
        raise PairingError(f"no record for pair {pair}")
    modulus = (p - 1) * p ** (n - 1)
    if (j1 - j2) % modulus:
        raise PairingError(f"{j1} and {j2} are not congruent modulo {modulus}")
    r1, r2 = by_j[j1], by_j[j2]
    if r1.parity != r2.parity:
        raise PairingError("pair mixes parity classes")
    if r1.tag != r2.tag or r1.character != r2.character:
        raise PairingError("pair mixes normalizations or characters")
    same_class = [r for r in records if r.parity == r1.parity and r.tag == r1.tag and r.character == r1.character]
    finite = [r.Phi.valuation for r in same_class if not r.Phi.is_zero]
    shift = min(finite) if finite else 0
    scale = PAdicNumber(p, r1.R_p.prec, -shift, 1)
    s1, s2 = r1.Phi * scale, r2.Phi * scale
    diff = s1 - s2
    v = diff.valuation if not diff.is_zero else INF
    if diff.is_zero and diff.zero_prec != INF and diff.zero_prec < n:
        v = diff.zero_prec
    consistent = v >= n
    if consistent:
        verdict = f"consistent with Lambda-membership at level {n}"
    else:
        verdict = (f"not consistent at level {n} (valuation {v}); attributed to the period-normalization "
                   "choice, see caveats")
    audit = {
        "records": [
            {
                "j_offset": r.j_offset,
                "factorial_factor": r.factorial_factor,
                "R_p": repr(r.R_p),
                "L_alg": str(r.L_alg),
                "Phi": repr(r.Phi),
                "audit_ok": r.audit(),
            }
            for r in (r1, r2)
        ],
        "class_min_valuation": shift,
        "rescaled_difference": repr(diff),
    }
    return KummerReport(p, n, (j1, j2), modulus, shift, (s1, s2), v, verdict, consistent, audit=audit)
