"""Fast invariant suites run by ``symcube selftest``."""

from __future__ import annotations

import random

import mpmath

from ..lfunc import LFunction, required_terms, root_number
from ..modforms import SUPPORTED_WEIGHTS, delta, delta_eta, divisor_sigma_table, eigenform, verify_multiplicativity
from ..padic import unit_root
from ..sym3rep import (
    UNIPOTENT,
    cokernel_corank,
    euler_factor_numeric,
    euler_factor_sym3,
    hodge_data,
    meataxe_irreducible_sym3,
    sym3_matrix,
)


def _two_oracle_delta():
    n = 500
    d = delta(n)
    sigma = divisor_sigma_table(11, n)
    return d.terms == delta_eta(n).terms and all((d[m] - sigma[m]) % 691 == 0 for m in range(1, n + 1))


def _multiplicativity():
    return all(verify_multiplicativity(eigenform(k, 300), 300) for k in SUPPORTED_WEIGHTS)


def _sym3_homomorphism():
    rng = random.Random(1)
    for _ in range(200):
        a = [[rng.randint(-9, 9) for _ in range(2)] for _ in range(2)]
        b = [[rng.randint(-9, 9) for _ in range(2)] for _ in range(2)]
        ab = [[sum(a[i][t] * b[t][j] for t in range(2)) for j in range(2)] for i in range(2)]
        if sym3_matrix(ab).entries != (sym3_matrix(a) @ sym3_matrix(b)).entries:
            return False
    return True


def _corank_and_meataxe():
    u = sym3_matrix(UNIPOTENT)
    return (
        cokernel_corank(u, 3) == 2
        and all(cokernel_corank(u, p) == 1 for p in (5, 7, 11, 13))
        and not meataxe_irreducible_sym3(3).irreducible
        and all(meataxe_irreducible_sym3(p).irreducible for p in (5, 7, 11, 13))
    )


def _euler_factors():
    f = eigenform(12, 30)
    for ell in (2, 3, 5, 7, 11, 13):
        exact = euler_factor_sym3(ell, f.a(ell), 12).coefficients
        numeric = euler_factor_numeric(ell, f.a(ell), 12, dps=40)
        with mpmath.workdps(40):
            for c, x in zip(exact, numeric):
                if abs(c - x) > mpmath.mpf(10) ** -20 * max(1, abs(c)):
                    return False
    return True


def _hodge():
    return all(hodge_data(k).is_self_dual() for k in range(2, 41, 2))


def _unit_root():
    f = eigenform(12, 12)
    return unit_root(f.a(11), 12, 11, 20).check()


def _functional_equation():
    digits = 20
    L = LFunction(eigenform(12, required_terms(12, digits) + 16))
    eps = root_number(L, digits)
    s = mpmath.mpc("15.3", "1.7")
    with mpmath.workdps(40):
        a = L.complete(s, digits)
        b = L.complete(L.w - s, digits, split="1.15")
        return abs(abs(eps.mid) - 1) < mpmath.mpf(10) ** -15 and a.overlaps(eps * b)


SUITES = (
    ("two-oracle Delta and 691 congruence", _two_oracle_delta),
    ("Hecke multiplicativity", _multiplicativity),
    ("Sym^3 homomorphism", _sym3_homomorphism),
    ("cokernel corank and surrogate irreducibility", _corank_and_meataxe),
    ("Euler factors vs Satake roots", _euler_factors),
    ("Hodge self-duality", _hodge),
    ("unit root Hensel check", _unit_root),
    ("functional equation residual", _functional_equation),
)


def selftest(out=print) -> bool:
    ok = True
    for name, fn in SUITES:
        passed = bool(fn())
        ok &= passed
        out(f"{'PASS' if passed else 'FAIL'}  {name}")
    return ok
