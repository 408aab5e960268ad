"""Complex midpoint-radius balls over mpmath."""

from __future__ import annotations

from numbers import Number

import mpmath
from mpmath import mpc, mpf


def _ulp_radius(mid) -> mpf:
    # One rounding of |mid| at the current working precision, doubled for safety.
    return abs(mid) * mpf(2) ** (2 - mpmath.mp.prec)


class ErrorBall:
    """A complex number ``mid`` known to within absolute error ``rad``.

    Every operation returns a radius covering the propagated input radii plus
    one rounding of the new midpoint at the working precision.
    """

    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=0):
        self.mid = mpc(mid)
        self.rad = mpf(rad)
        if self.rad < 0:
            raise ValueError("radius must be non-negative")

    @classmethod
    def exact(cls, x):
        return cls(x, 0)

    @staticmethod
    def _coerce(x):
        if isinstance(x, ErrorBall):
            return x
        if isinstance(x, (Number, mpf, mpc)):
            return ErrorBall(x, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        mid = self.mid + other.mid
        return ErrorBall(mid, self.rad + other.rad + _ulp_radius(mid))

    __radd__ = __add__

    def __neg__(self):
        return ErrorBall(-self.mid, self.rad)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        mid = self.mid * other.mid
        rad = abs(self.mid) * other.rad + abs(other.mid) * self.rad + self.rad * other.rad
        return ErrorBall(mid, rad + _ulp_radius(mid))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.contains_zero():
            raise ZeroDivisionError("division by a ball containing zero")
        mid = self.mid / other.mid
        b = abs(other.mid)
        rad = (abs(self.mid) * other.rad + b * self.rad) / (b * (b - other.rad))
        return ErrorBall(mid, rad + _ulp_radius(mid))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = ErrorBall(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __abs__(self) -> mpf:
        return abs(self.mid)

    def abs_upper(self) -> mpf:
        return abs(self.mid) + self.rad

    def abs_lower(self) -> mpf:
        return max(abs(self.mid) - self.rad, mpf(0))

    def contains_zero(self) -> bool:
        return abs(self.mid) <= self.rad

    def contains(self, other) -> bool:
        other = self._coerce(other)
        return abs(self.mid - other.mid) + other.rad <= self.rad

    def overlaps(self, other) -> bool:
        other = self._coerce(other)
        return abs(self.mid - other.mid) <= self.rad + other.rad

    @property
    def real(self) -> ErrorBall:
        return ErrorBall(self.mid.real, self.rad)

    @property
    def imag(self) -> ErrorBall:
        return ErrorBall(self.mid.imag, self.rad)

    def conjugate(self) -> ErrorBall:
        return ErrorBall(self.mid.conjugate(), self.rad)

    def widen(self, extra) -> ErrorBall:
        return ErrorBall(self.mid, self.rad + mpf(extra))

    def relative_radius(self) -> mpf:
        m = abs(self.mid)
        return mpf("inf") if m == 0 else self.rad / m

    def to_dict(self, digits: int) -> dict:
        """Decimal-string serialization (deterministic for a given ``digits``).

        The radius string covers the rounding of the midpoint strings and is
        rounded upward, so the serialized ball contains this one.
        """
        with mpmath.workdps(max(digits, mpmath.mp.dps) + 10):
            re = mpmath.nstr(self.mid.real, digits, min_fixed=-5, max_fixed=5)
            im = mpmath.nstr(self.mid.imag, digits, min_fixed=-5, max_fixed=5)
            shift = abs(mpc(mpf(re), mpf(im)) - self.mid)
            rad = (self.rad + shift) * mpf("1.01")
            rad_str = mpmath.nstr(rad, 3)
            if mpf(rad_str) < self.rad + shift:
                rad_str = mpmath.nstr(rad * 2, 3)
        return {"re": re, "im": im, "radius": rad_str}

    def __repr__(self):
        return f"ErrorBall({mpmath.nstr(self.mid, 15)} +/- {mpmath.nstr(self.rad, 3)})"
