"""Exact truncated q-expansions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

# Below this length the quadratic loop beats packing overhead.
_SCHOOLBOOK_CUTOFF = 48


def schoolbook_mul(a, b, n):
    """First ``n`` coefficients of the product of two coefficient lists."""
    out = [0] * n
    b = list(b[:n])
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j, y in enumerate(b[: n - i]):
            out[i + j] += x * y
    return out


def _pack(coeffs, nbytes):
    return int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little")


def _pack_signed(coeffs, nbytes):
    pos = _pack([c if c > 0 else 0 for c in coeffs], nbytes)
    neg = _pack([-c if c < 0 else 0 for c in coeffs], nbytes)
    return pos - neg


def kronecker_mul(a, b, n):
    """First ``n`` coefficients of ``a*b`` for integer lists, by Kronecker substitution.

    Both polynomials are evaluated at 2**B with B wide enough that no product
    coefficient overflows its slot, multiplied as big integers, and unpacked.
    """
    a = list(a[:n])
    b = list(b[:n])
    if not a or not b:
        return [0] * n
    if min(len(a), len(b)) < _SCHOOLBOOK_CUTOFF:
        return schoolbook_mul(a, b, n)
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    if bound == 0:
        return [0] * n
    nbits = bound.bit_length() + 2
    nbytes = (nbits + 7) // 8
    width = 8 * nbytes
    length = len(a) + len(b) - 1
    prod = _pack_signed(a, nbytes) * _pack_signed(b, nbytes)
    half = 1 << (width - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * length, "little")
    raw = (prod + offset).to_bytes(length * nbytes, "little")
    out = [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") - half
        for i in range(min(length, n))
    ]
    out.extend([0] * (n - len(out)))
    return out


def series_mul(a, b, n):
    """Truncated product; integer lists take the fast path, anything else is schoolbook."""
    if all(type(x) is int for x in a) and all(type(x) is int for x in b):
        return kronecker_mul(a, b, n)
    return schoolbook_mul(a, b, n)


def _normalize(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Rational):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"q-expansion coefficients must be exact, got {type(x).__name__}")


@dataclass(frozen=True)
class QExpansion:
    """``sum_{n<=N} a_n q^n`` known exactly up to ``q^N``.

    Arithmetic never extends precision: results are truncated to the smaller
    precision of the operands.
    """

    weight: int
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(_normalize(x) for x in self.terms))
        if not self.terms:
            raise ValueError("a q-expansion needs at least the constant term")

    @property
    def precision(self) -> int:
        return len(self.terms) - 1

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.terms[n]
        if n < 0:
            raise IndexError(n)
        if n > self.precision:
            raise IndexError(f"coefficient a_{n} unknown (precision {self.precision})")
        return self.terms[n]

    def __len__(self):
        return len(self.terms)

    def is_integral(self) -> bool:
        return all(type(x) is int for x in self.terms)

    def truncate(self, precision: int) -> QExpansion:
        if precision > self.precision:
            raise ValueError("truncate() cannot extend precision")
        return QExpansion(self.weight, self.terms[: precision + 1])

    def _check_weight(self, other):
        if self.weight != other.weight:
            raise ValueError(f"cannot add weight {self.weight} and weight {other.weight} series")

    def __add__(self, other):
        if not isinstance(other, QExpansion):
            return NotImplemented
        self._check_weight(other)
        n = min(len(self), len(other))
        return QExpansion(self.weight, [x + y for x, y in zip(self.terms[:n], other.terms[:n])])

    def __sub__(self, other):
        if not isinstance(other, QExpansion):
            return NotImplemented
        self._check_weight(other)
        n = min(len(self), len(other))
        return QExpansion(self.weight, [x - y for x, y in zip(self.terms[:n], other.terms[:n])])

    def __neg__(self):
        return QExpansion(self.weight, [-x for x in self.terms])

    def __mul__(self, other):
        if isinstance(other, QExpansion):
            n = min(len(self), len(other))
            return QExpansion(self.weight + other.weight, series_mul(self.terms, other.terms, n))
        if isinstance(other, Rational):
            return QExpansion(self.weight, [x * other for x in self.terms])
        return NotImplemented

    __rmul__ = __mul__

    def exact_div(self, d: int) -> QExpansion:
        """Divide every coefficient by ``d``; raises if any division is inexact."""
        out = []
        for n, x in enumerate(self.terms):
            q, r = divmod(x, d) if type(x) is int else (Fraction(x) / d, 0)
            if r:
                raise ArithmeticError(f"coefficient a_{n} = {x} is not divisible by {d}")
            out.append(q)
        return QExpansion(self.weight, out)

    def __repr__(self):
        head = ", ".join(str(x) for x in self.terms[:6])
        more = ", ..." if len(self.terms) > 6 else ""
        return f"QExpansion(weight={self.weight}, [{head}{more}], precision={self.precision})"
