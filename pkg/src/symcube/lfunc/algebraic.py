"""Algebraic parts of critical values.

L_alg(j) = G(rho)^2 L(k + j) / ((2 pi i)^(2j) Omega^e) with e the parity
(-1)^j rho(-1).  Omega^e is fixed by declaring L_alg = 1 at a reference point
of that parity: the smallest j with a nonzero value ("first") or the largest
("last").  Every output carries the tag of the normalization used.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath
from mpmath import mpf

from ..errors import RationalizationError
from .afe import LFunction
from .ball import ErrorBall
from .critical import CriticalPoint, critical_values
from .rationalize import exact_fraction, rationalize

REFERENCES = ("first", "last")
STABILITY_EXTRA_DIGITS = 20


@dataclass(frozen=True)
class AlgebraicValue:
    point: CriticalPoint
    quotient: ErrorBall
    rational: Fraction | None
    residual: mpf | None
    tag: str


def default_height(digits: int) -> int:
    # Keeps H^2 * tolerance far below 1, so spurious convergents are rare.
    return 10 ** (digits // 2 + 3)


def period_power(j: int):
    """(2 pi i)^(2j) = (-4 pi^2)^j at the working precision."""
    return (-4 * mpmath.pi**2) ** j


def reference_points(values, reference: str = "first") -> dict:
    """parity -> j_offset of the reference point (nonzero value), per the rule ``reference``."""
    if reference not in REFERENCES:
        raise ValueError(f"reference must be one of {REFERENCES}")
    refs = {}
    ordered = values if reference == "first" else list(reversed(values))
    for cp, ball in ordered:
        if cp.parity not in refs and not ball.contains_zero():
            refs[cp.parity] = cp.j_offset
    return refs


def normalization_tag(L: LFunction, refs: dict, reference: str) -> str:
    parts = [f"Omega{'+' if e > 0 else '-'}:j={refs[e]}" for e in sorted(refs, reverse=True)]
    return f"sym3-k{L.k}-{L.twist.label}-{reference}[{','.join(parts)}]"


def algebraic_quotients(L: LFunction, values, reference: str = "first", digits: int = 30):
    """(tag, {j_offset: quotient ball}) normalized so the reference points give 1."""
    refs = reference_points(values, reference)
    tag = normalization_tag(L, refs, reference)
    by_j = {cp.j_offset: ball for cp, ball in values}
    g2 = L.twist.gauss_sum_squared()
    out = {}
    with mpmath.workdps(2 * digits + 40):
        raw = {j: by_j[j] * ErrorBall(g2 / period_power(j)) for j in by_j}
        for cp, _ in values:
            ref = refs.get(cp.parity)
            if ref is None:
                continue
            out[cp.j_offset] = raw[cp.j_offset] / raw[ref]
    return tag, out


def algebraic_parts(L: LFunction, values, digits: int, reference: str = "first", max_height: int | None = None):
    """AlgebraicValue for every critical point whose parity class has a reference."""
    max_height = max_height or default_height(digits)
    tag, quotients = algebraic_quotients(L, values, reference, digits)
    out = []
    for cp, _ in values:
        q = quotients.get(cp.j_offset)
        if q is None:
            continue
        r = rationalize(q, max_height)
        residual = None
        if r is not None:
            with mpmath.workdps(2 * digits + 40):
                residual = abs(q.mid - mpf(r.numerator) / r.denominator)
        out.append(AlgebraicValue(cp, q, r, residual, tag))
    return out


def algebraic_value(L: LFunction, point: CriticalPoint, digits: int, reference: str = "first",
                    max_height: int | None = None) -> AlgebraicValue:
    """Recognized rational L_alg at ``point``, checked stable at digits + 20.

    Raises RationalizationError (carrying the raw quotient) when recognition
    fails at either precision, the two rationals differ, or the residual is
    not below 10^(-digits/2).
    """
    max_height = max_height or default_height(digits)
    found = []
    for d in (digits, digits + STABILITY_EXTRA_DIGITS):
        parts = algebraic_parts(L, critical_values(L, d), d, reference, max_height)
        match = [a for a in parts if a.point.j_offset == point.j_offset]
        if not match:
            raise RationalizationError("no reference point for this parity class", None)
        found.append(match[0])
    lo, hi = found
    if lo.rational is None or hi.rational is None or lo.rational != hi.rational:
        raise RationalizationError(
            f"unstable recognition at j={point.j_offset}: {lo.rational} vs {hi.rational}", lo.quotient
        )
    if lo.residual >= mpf(10) ** (-(digits / 2)):
        raise RationalizationError(f"residual {lo.residual} too large", lo.quotient)
    return lo


def common_factor_check(first: list, last: list) -> dict:
    """Per parity, the set of ratios first/last (a single element means one common factor)."""
    ratios = {}
    lookup = {a.point.j_offset: a for a in last}
    for a in first:
        b = lookup.get(a.point.j_offset)
        if b is None or a.rational is None or b.rational is None or b.rational == 0:
            continue
        ratios.setdefault(a.point.parity, set()).add(a.rational / b.rational)
    return ratios


