"""Archimedean factor Gamma_C(s) Gamma_C(s - (k-1)) of L(Sym^3 f, s)."""

from __future__ import annotations

import mpmath
from mpmath import mpf

from ..errors import PoleError
from .ball import ErrorBall


def gamma_c(s):
    """Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s) at the current working precision."""
    return 2 * (2 * mpmath.pi) ** (-s) * mpmath.gamma(s)


class GammaFactor:
    """s -> Gamma_C(s) Gamma_C(s - k + 1); shifts {0, k-1} from Hodge numbers (0, 3k-3), (k-1, 2k-2)."""

    def __init__(self, k: int):
        self.k = k
        self.shifts = (0, k - 1)

    def poles_at(self, s) -> bool:
        s = mpmath.mpmathify(s)
        if mpmath.im(s) != 0:
            return False
        re = mpmath.re(s)
        return re == mpmath.floor(re) and re <= self.shifts[1]

    def raw(self, s):
        """Midpoint value at the current working precision (no pole check)."""
        return gamma_c(s) * gamma_c(s - self.shifts[1])

    def log_abs(self, s) -> mpf:
        """log |gamma(s)| via loggamma; cheap magnitude estimate away from poles."""
        two_pi = 2 * mpmath.pi
        total = mpf(0)
        for shift in self.shifts:
            z = mpmath.mpmathify(s) - shift
            total += mpmath.log(2) - mpmath.re(z) * mpmath.log(two_pi) + mpmath.re(mpmath.loggamma(z))
        return total

    def __call__(self, s, digits: int = 30) -> ErrorBall:
        if self.poles_at(s):
            raise PoleError(s)
        with mpmath.workdps(digits + 15):
            val = self.raw(mpmath.mpmathify(s))
            # mpmath's gamma is correctly rounded to far beyond digits + 10.
            return ErrorBall(val, abs(val) * mpf(10) ** (-(digits + 10)))


def gamma_factor(k: int) -> GammaFactor:
    return GammaFactor(k)
