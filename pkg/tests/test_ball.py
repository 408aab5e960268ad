import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symcube.lfunc import ErrorBall

finite = st.floats(-1e6, 1e6, allow_nan=False, allow_infinity=False)
radii = st.floats(0, 1e-3, allow_nan=False)


def perturbed(ball, tx, ty):
    # A point inside the ball: midpoint shifted by (tx, ty) * radius / 2.
    return ball.mid + mpmath.mpc(tx, ty) * ball.rad / 2


@settings(max_examples=200, deadline=None)
@given(finite, finite, radii, finite, finite, radii, st.floats(-1, 1), st.floats(-1, 1))
def test_operations_enclose_perturbed_inputs(a, b, ra, c, d, rc, tx, ty):
    with mpmath.workdps(30):
        x = ErrorBall(mpmath.mpc(a, b), ra)
        y = ErrorBall(mpmath.mpc(c, d), rc)
        px, py = perturbed(x, tx, ty), perturbed(y, ty, tx)
        with mpmath.workdps(80):
            exact = {"add": px + py, "sub": px - py, "mul": px * py}
        assert (x + y).contains(exact["add"])
        assert (x - y).contains(exact["sub"])
        assert (x * y).contains(exact["mul"])
        if not y.contains_zero():
            with mpmath.workdps(80):
                q = px / py
            assert (x / y).contains(q)


def test_contains_zero_definition():
    assert ErrorBall(mpmath.mpf("1e-10"), mpmath.mpf("1e-10")).contains_zero()
    assert not ErrorBall(mpmath.mpf("1e-10"), mpmath.mpf("0.9e-10")).contains_zero()
    with pytest.raises(ZeroDivisionError):
        ErrorBall(1) / ErrorBall(0, 1)
    with pytest.raises(ValueError):
        ErrorBall(1, -1)


def test_powers_and_parts():
    x = ErrorBall(mpmath.mpc(1, 1), mpmath.mpf("1e-20"))
    assert (x**2).contains(mpmath.mpc(0, 2))
    assert x.real.mid == 1 and x.imag.mid == 1
    assert x.conjugate().mid == mpmath.mpc(1, -1)


def test_serialized_ball_contains_original():
    with mpmath.workdps(60):
        x = ErrorBall(mpmath.pi * mpmath.mpc(1, mpmath.e), mpmath.mpf("1e-45"))
        d = x.to_dict(20)
        y = ErrorBall(mpmath.mpc(mpmath.mpf(d["re"]), mpmath.mpf(d["im"])), mpmath.mpf(d["radius"]))
        assert y.contains(x)
        assert x.to_dict(20) == d
