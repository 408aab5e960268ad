"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` (or ``python3 tests/test_acceptance.py``).
"""

import functools
import json
import random
import subprocess
import sys
import time
from pathlib import Path

import mpmath
from sympy import primerange

from symcube.certify import run_bk_certificate, run_imc_report, validate_certificate
from symcube.errors import OrdinarityError
from symcube.lfunc import LFunction, algebraic_parts, critical_values, required_terms, root_number
from symcube.modforms import SUPPORTED_WEIGHTS, delta, delta_eta, divisor_sigma_table, eigenform, verify_multiplicativity
from symcube.padic import ramified_factor, unit_root
from symcube.sym3rep import (
    UNIPOTENT,
    cokernel_corank,
    euler_factor_numeric,
    euler_factor_sym3,
    is_invariant,
    meataxe_irreducible_sym3,
    sym3_matrix,
)
from symcube.sym3rep.meataxe import generators_mod_p

RESULTS = {}
LINES = {}


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS[number] = False
                first = str(exc).splitlines()[0] if str(exc) else ""
                LINES[number] = f"ACCEPTANCE {number:2d} FAIL  {title} ({type(exc).__name__}: {first})"
                print("\n" + LINES[number], flush=True)
                raise
            RESULTS[number] = True
            LINES[number] = f"ACCEPTANCE {number:2d} PASS  {title} [{time.perf_counter() - start:.1f}s]"
            print("\n" + LINES[number], flush=True)

        return run

    return wrap


@criterion(1, "two-oracle Delta, a_2 = -24, a_3 = 252, 691 congruence")
def test_01_two_oracle_delta():
    start = time.perf_counter()
    d = delta(2000)
    assert d.terms == delta_eta(2000).terms
    assert d[2] == -24 and d[3] == 252
    sigma = divisor_sigma_table(11, 500)
    assert all((d[n] - sigma[n]) % 691 == 0 for n in range(1, 501))
    assert time.perf_counter() - start < 30


@criterion(2, "Hecke multiplicativity, all supported weights, coprime n*m <= 10^4")
def test_02_multiplicativity():
    start = time.perf_counter()
    for k in SUPPORTED_WEIGHTS:
        assert verify_multiplicativity(eigenform(k, 10**4), 10**4)
    assert time.perf_counter() - start < 30


@criterion(3, "Sym^3 homomorphism and det^6 on 1000 random pairs")
def test_03_homomorphism():
    rng = random.Random(3)
    for _ in range(1000):
        a = [[rng.randint(-9, 9) for _ in range(2)] for _ in range(2)]
        b = [[rng.randint(-9, 9) for _ in range(2)] for _ in range(2)]
        ab = [[sum(a[i][t] * b[t][j] for t in range(2)) for j in range(2)] for i in range(2)]
        assert sym3_matrix(ab).entries == (sym3_matrix(a) @ sym3_matrix(b)).entries
        assert sym3_matrix(a).det() == (a[0][0] * a[1][1] - a[0][1] * a[1][0]) ** 6


@criterion(4, "unipotent matrix reproduced; corank 1 for 3 < p <= 97, 2 at p = 3")
def test_04_matrix_and_corank():
    m = sym3_matrix(UNIPOTENT)
    assert m.entries == ((1, 3, 3, 1), (0, 1, 2, 1), (0, 0, 1, 1), (0, 0, 0, 1))
    assert all(cokernel_corank(m, p) == 1 for p in primerange(5, 98))
    assert cokernel_corank(m, 3) == 2


@criterion(5, "surrogate irreducibility: p = 3 reducible with span{x^3, y^3}; 5, 7, 11, 13 irreducible")
def test_05_meataxe():
    start = time.perf_counter()
    v = meataxe_irreducible_sym3(3)
    assert not v.irreducible and v.witness == ((1, 0, 0, 0), (0, 0, 0, 1))
    assert is_invariant([list(w) for w in v.witness], generators_mod_p(3), 3)
    assert all(meataxe_irreducible_sym3(p).irreducible for p in (5, 7, 11, 13))
    assert time.perf_counter() - start < 10


@criterion(6, "Euler factors match Satake-root expansion to 1e-20 on 100 random inputs")
def test_06_euler_factor_oracle():
    rng = random.Random(6)
    primes = list(primerange(2, 500))
    for _ in range(100):
        ell, k = rng.choice(primes), rng.choice(SUPPORTED_WEIGHTS)
        bound = 2 * mpmath.sqrt(mpmath.mpf(ell) ** (k - 1))
        a = rng.randint(-int(bound), int(bound))
        exact = euler_factor_sym3(ell, a, k).coefficients
        numeric = euler_factor_numeric(ell, a, k, dps=120)
        with mpmath.workdps(120):
            for c, x in zip(exact, numeric):
                assert abs(c - x) <= mpmath.mpf(10) ** -20 * max(1, abs(c))


@criterion(7, "functional equation residual at 10 strip points, |eps| = 1 +- 1e-20 (k = 12, 30 digits)")
def test_07_functional_equation():
    start = time.perf_counter()
    n = required_terms(12, 30) + 16
    assert n <= 10**4
    L = LFunction(eigenform(12, n))
    eps = root_number(L, 30)
    assert abs(abs(eps.mid) - 1) <= mpmath.mpf(10) ** -20
    assert eps.rad <= mpmath.mpf(10) ** -20
    rng = random.Random(7)
    with mpmath.workdps(60):
        for _ in range(10):
            s = mpmath.mpc(rng.uniform(11, 23), rng.uniform(-2, 2))
            a = L.complete(s, 30)
            b = L.complete(34 - s, 30, split=mpmath.mpf("1.15"))
            assert abs(a.mid - eps.mid * b.mid) <= a.rad + b.rad + eps.rad * abs(b.mid)
    assert time.perf_counter() - start < 300


@criterion(8, "k = 12, p = 11: all 11 critical values nonzero, 11 conditional conclusions")
def test_08_nonvanishing_certificate():
    start = time.perf_counter()
    cert = run_bk_certificate(12, 11, 30)
    rows = cert.data["critical_values"]
    assert cert.status == "complete" and len(rows) == 11
    for row in rows:
        if not row["central"]:
            assert row["annotation"].startswith("automatic")
    zero = [r["j_offset"] for r in rows if not r["nonvanishing"]]
    assert not zero, f"balls containing zero at j = {zero} (root number {cert.data['root_number']['re']})"
    assert len(cert.conclusions) == 11
    assert time.perf_counter() - start < 600


@criterion(9, "algebraic parts identical at 60 and 100 digits, residuals < 1e-30")
def test_09_rationalization_stability():
    L = LFunction(eigenform(12, required_terms(12, 100) + 16))
    root_number(L, 100)
    lo = algebraic_parts(L, critical_values(L, 60), 60)
    hi = algebraic_parts(L, critical_values(L, 100), 100)
    assert len(lo) == len(hi) == 11
    for a, b in zip(lo, hi):
        assert a.rational is not None and a.rational == b.rational, (a.point.j_offset, a.rational, b.rational)
        assert a.residual < mpmath.mpf(10) ** -30 and b.residual < mpmath.mpf(10) ** -30


@criterion(10, "unit root mod 11^20, ordinarity errors at 2, 3, 5, 7, ramified valuations")
def test_10_padic():
    f = eigenform(12, 20)
    u = unit_root(f.a(11), 12, 11, 20)
    alpha = int(u.alpha.lift())
    assert (alpha * alpha - f.a(11) * alpha + 11**11) % 11**20 == 0
    assert u.alpha.valuation == 0
    for p in (2, 3, 5, 7):
        try:
            unit_root(f.a(p), 12, p, 20)
        except OrdinarityError:
            continue
        raise AssertionError(f"no ordinarity error at p = {p}")
    for m in (1, 2):
        for j in range(11):
            assert ramified_factor(u, j, m).valuation == m * (2 * (j + 11) - 11)


@criterion(11, "Kummer experiment (0, 10) at p = 11: complete and auditable report")
def test_11_kummer():
    cert = run_imc_report(12, 11, 60, 20)
    reports = [c for c in cert.data["congruences"] if c["pair"] == [0, 10]]
    assert len(reports) == 1
    rep = reports[0]
    assert rep["difference_valuation"] is not None
    assert all(r["audit_ok"] for r in rep["audit"]["records"])
    assert all(r["audit_ok"] for r in cert.data["interpolation"]["records"])
    if not rep["consistent"]:
        assert "period-normalization" in rep["verdict"]
    assert rep["caveats"]
    print(f"\n  pair (0, 10): valuation {rep['difference_valuation']}, verdict: {rep['verdict']}")


@criterion(12, "two certify runs produce byte-identical JSON")
def test_12_determinism(tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        cmd = [sys.executable, "-m", "symcube.certify.cli", "certify", "--weight", "12", "--p", "11",
               "--digits", "30", "--seed", "0", "--cache", str(tmp_path / "cache"), "--out", str(out)]
        subprocess.run(cmd, check=False)
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
    assert validate_certificate(json.loads(outs[0])) == []


if __name__ == "__main__":
    import tempfile

    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                if "tmp_path" in fn.__code__.co_varnames:
                    with tempfile.TemporaryDirectory() as d:
                        fn(Path(d))
                else:
                    fn()
            except BaseException:
                pass
    print("\nsummary:", " ".join(f"{n}:{'PASS' if ok else 'FAIL'}" for n, ok in sorted(RESULTS.items())))
