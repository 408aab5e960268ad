"""Elements of Q_p with fixed relative precision."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import PAdicPrecisionError

INF = math.inf


def valuation(n: int, p: int) -> int:
    """v_p of a nonzero integer."""
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class PAdicNumber:
    """unit * p^valuation, known modulo p^(valuation + prec).

    A zero is stored with valuation = inf and ``zero_prec`` the absolute
    precision to which it is known (inf for an exact zero).
    """

    p: int
    prec: int
    valuation: int | float
    unit: int
    zero_prec: int | float = INF

    def __post_init__(self):
        if self.valuation != INF:
            if self.prec <= 0:
                raise PAdicPrecisionError(f"relative precision exhausted ({self.prec})")
            if self.unit % self.p == 0:
                raise ValueError("unit part must be prime to p")

    # -- construction -------------------------------------------------------

    @classmethod
    def zero(cls, p: int, prec: int, abs_prec=INF):
        return cls(p, prec, INF, 0, abs_prec)

    @classmethod
    def from_int(cls, n: int, p: int, prec: int):
        if n == 0:
            return cls.zero(p, prec)
        v = valuation(n, p)
        return cls(p, prec, v, (n // p**v) % p**prec)

    @classmethod
    def from_fraction(cls, x, p: int, prec: int):
        x = Fraction(x)
        if x == 0:
            return cls.zero(p, prec)
        vn, vd = valuation(x.numerator, p), valuation(x.denominator, p)
        num = x.numerator // p**vn
        den = x.denominator // p**vd
        mod = p**prec
        return cls(p, prec, vn - vd, num * pow(den, -1, mod) % mod)

    # -- properties ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.valuation == INF

    @property
    def abs_prec(self):
        """Absolute precision: the value is known modulo p^abs_prec."""
        return self.zero_prec if self.is_zero else self.valuation + self.prec

    @property
    def is_unit(self) -> bool:
        return self.valuation == 0

    def lift(self) -> Fraction:
        """The canonical rational representative unit * p^valuation."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.valuation

    def _check(self, other):
        if isinstance(other, int):
            return PAdicNumber.from_int(other, self.p, self.prec)
        if isinstance(other, Fraction):
            return PAdicNumber.from_fraction(other, self.p, self.prec)
        if not isinstance(other, PAdicNumber):
            return NotImplemented
        if other.p != self.p:
            raise ValueError("mixed primes")
        return other

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        if self.is_zero:
            return self
        mod = self.p**self.prec
        return PAdicNumber(self.p, self.prec, self.valuation, (-self.unit) % mod)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.p
        cap = min(self.abs_prec, other.abs_prec)
        if self.is_zero and other.is_zero:
            return PAdicNumber.zero(p, min(self.prec, other.prec), cap)
        if self.is_zero or other.is_zero:
            x = other if self.is_zero else self
            if cap >= x.abs_prec:
                return x
            if cap <= x.valuation:
                return PAdicNumber.zero(p, x.prec, cap)
            m = cap - x.valuation
            return PAdicNumber(p, m, x.valuation, x.unit % p**m)
        vmin = min(self.valuation, other.valuation)
        total = self.unit * p ** (self.valuation - vmin) + other.unit * p ** (other.valuation - vmin)
        known = cap - vmin  # total is known modulo p^known
        total %= p**known
        if total == 0:
            return PAdicNumber.zero(p, min(self.prec, other.prec), cap)
        v = valuation(total, p)
        m = known - v
        return PAdicNumber(p, m, vmin + v, (total // p**v) % p**m)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.p
        if self.is_zero or other.is_zero:
            if self.is_zero and other.is_zero:
                cap = self.abs_prec + other.abs_prec
            elif self.is_zero:
                cap = self.zero_prec + other.valuation
            else:
                cap = other.zero_prec + self.valuation
            return PAdicNumber.zero(p, min(self.prec, other.prec), cap)
        m = min(self.prec, other.prec)
        return PAdicNumber(p, m, self.valuation + other.valuation, self.unit * other.unit % p**m)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of a p-adic zero")
        mod = self.p**self.prec
        return PAdicNumber(self.p, self.prec, -self.valuation, pow(self.unit, -1, mod))

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._check(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_zero:
            return PAdicNumber.zero(self.p, self.prec, INF if n == 0 else self.zero_prec * n)
        if n == 0:
            return PAdicNumber.from_int(1, self.p, self.prec)
        mod = self.p**self.prec
        return PAdicNumber(self.p, self.prec, self.valuation * n, pow(self.unit, n, mod))

    def congruent(self, other) -> bool:
        """Equality at the precision both operands are known to."""
        other = self._check(other)
        return (self - other).is_zero

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self.congruent(other)

    __hash__ = None

    def __repr__(self):
        if self.is_zero:
            return f"O({self.p}^{self.zero_prec})"
        return f"{self.unit}*{self.p}^{self.valuation} + O({self.p}^{self.abs_prec})"
