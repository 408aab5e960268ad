from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symcube.errors import CharacterError, CriticalRangeError, OrdinarityError, PairingError, PAdicPrecisionError
from symcube.lfunc import quadratic_character
from symcube.modforms import eigenform
from symcube.padic import (
    PAdicNumber,
    euler_modification,
    interpolated_value,
    kummer_experiment,
    ramified_factor,
    unit_root,
    unramified_factors,
    valuation,
)

P, M = 11, 20
A11 = 534612  # tau(11)

nonzero = st.integers(-(10**40), 10**40).filter(lambda n: n != 0)
fractions = st.builds(Fraction, nonzero, st.integers(1, 10**12))


def padic(x, prec=M):
    return PAdicNumber.from_fraction(x, P, prec)


@settings(max_examples=150, deadline=None)
@given(fractions, fractions, fractions)
def test_ring_axioms(a, b, c):
    x, y, z = padic(a), padic(b), padic(c)
    assert ((x + y) + z).congruent(x + (y + z))
    assert ((x * y) * z).congruent(x * (y * z))
    assert (x * (y + z)).congruent(x * y + x * z)
    assert (x + y).congruent(padic(a + b))
    assert (x * y).congruent(padic(a * b))
    assert (x / y).congruent(padic(a / b))


@settings(max_examples=100, deadline=None)
@given(fractions, fractions)
def test_valuations_add_under_multiplication(a, b):
    x, y = padic(a), padic(b)
    assert (x * y).valuation == x.valuation + y.valuation


def test_addition_keeps_worse_precision():
    x = PAdicNumber.from_int(1, P, 5)
    y = PAdicNumber.from_int(P**2, P, 20)
    s = x + y
    assert s.abs_prec == 5
    cancel = PAdicNumber.from_int(1 + P**3, P, 5) - PAdicNumber.from_int(1, P, 5)
    assert cancel.valuation == 3 and cancel.abs_prec == 5 and cancel.prec == 2
    lost = PAdicNumber.from_int(1 + P**7, P, 5) - PAdicNumber.from_int(1, P, 5)
    assert lost.is_zero and lost.zero_prec == 5


def test_precision_exhaustion_is_loud():
    with pytest.raises(PAdicPrecisionError):
        PAdicNumber(P, 0, 1, 3)
    with pytest.raises(ZeroDivisionError):
        PAdicNumber.from_int(1, P, 5) / PAdicNumber.zero(P, 5)


def test_zero_and_lift():
    z = PAdicNumber.from_int(0, P, 5)
    assert z.is_zero and z.valuation == float("inf")
    x = PAdicNumber.from_fraction(Fraction(3, 121), P, 5)
    assert x.valuation == -2 and x.lift() == Fraction(3, 121)
    assert valuation(11**4 * 6, 11) == 4


def test_unit_root_of_delta_at_11():
    assert eigenform(12, 12).a(11) == A11
    u = unit_root(A11, 12, P, M)
    alpha = u.alpha.lift()
    assert alpha.denominator == 1
    a = int(alpha)
    assert (a * a - A11 * a + P**11) % P**M == 0
    assert a % P == A11 % P
    assert u.alpha.valuation == 0 and u.beta.valuation == 11
    assert (u.alpha * u.beta).valuation == 11
    assert u.check()


def test_hensel_root_is_unique_unit_root():
    # Brute-force oracle modulo 11^2: the unit roots of X^2 - aX + 11^11.
    roots = [x for x in range(P**2) if (x * x - A11 * x + P**11) % P**2 == 0 and x % P]
    u = unit_root(A11, 12, P, M)
    assert roots == [int(u.alpha.lift()) % P**2]


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_non_ordinary_primes_rejected(p):
    f = eigenform(12, 10)
    with pytest.raises(OrdinarityError, match="ordinary"):
        unit_root(f.a(p), 12, p, M)


@pytest.fixture(scope="module")
def root():
    return unit_root(A11, 12, P, M)


def test_unramified_factor_valuations(root):
    for j in range(11):
        f1, f2, f3, f4 = unramified_factors(root, j)
        assert f1.valuation == 0
        assert f4.valuation == 0  # 1 - p^(2k-3-j) * unit
        # At the ends of the range the middle factors collapse to 1 - 1/alpha,
        # a unit exactly when alpha is not 1 mod p; tau(11) = 1 mod 11 makes it a non-unit.
        assert f2.valuation == (1 if j == 0 else 0)
        assert f3.valuation == (1 if j == 10 else 0)
    one_minus = 1 - 1 / root.alpha
    assert unramified_factors(root, 0)[1].congruent(one_minus)
    assert unramified_factors(root, 10)[2].congruent(one_minus)


def test_first_factor_units_for_generic_alpha():
    u = unit_root(3, 12, 13, 10)
    for j in range(11):
        assert all(f.valuation == 0 for f in unramified_factors(u, j))


def test_ramified_branch_valuation(root):
    for m in (1, 2, 3):
        for j in range(11):
            assert ramified_factor(root, j, m).valuation == m * (2 * (j + 11) - 11)
    chi = quadratic_character_11()
    assert euler_modification(root, 4, chi).valuation == 2 * (4 + 11) - 11


def quadratic_character_11():
    return quadratic_character(-11)


def test_branch_guards(root):
    with pytest.raises(CharacterError):
        ramified_factor(root, 0, 0)
    with pytest.raises(CharacterError):
        euler_modification(root, 0, quadratic_character(-3))
    with pytest.raises(CriticalRangeError):
        euler_modification(root, 11)
    with pytest.raises(CriticalRangeError):
        euler_modification(root, -1)


def test_interpolated_values(root):
    r0 = interpolated_value(root, 0, None, 1, "tag")
    assert r0.factorial_factor == 39916800  # 0! * 11!
    assert r0.audit()
    assert r0.Phi.congruent(PAdicNumber.from_int(39916800, P, M) * r0.R_p)
    r5 = interpolated_value(root, 5, None, 0, "tag")
    assert r5.Phi.is_zero and r5.Phi.valuation == float("inf")
    flagged = interpolated_value(root, 2, None, Fraction(1, 11), "tag")
    assert flagged.flags and flagged.audit()


def test_kummer_experiment(root):
    values = {0: Fraction(1), 1: Fraction(1), 10: Fraction(-1, 4644631106519040000), 2: Fraction(23, 168480)}
    records = [interpolated_value(root, j, None, v, "tag") for j, v in values.items()]
    rep = kummer_experiment(records, P, 1, (0, 10))
    assert rep.difference_valuation >= 1 and rep.consistent
    assert rep.rescale_exponent == min(r.Phi.valuation for r in records if r.parity == 0)
    assert all(entry["audit_ok"] for entry in rep.audit["records"])
    assert rep.caveats
    assert kummer_experiment(records, P, 1, (0, 0)).difference_valuation == float("inf")
    with pytest.raises(PairingError):
        kummer_experiment(records, P, 1, (0, 1))
    other = [interpolated_value(root, 10, None, values[10], "other-tag")] + records[:1]
    with pytest.raises(PairingError):
        kummer_experiment(other, P, 1, (0, 10))
