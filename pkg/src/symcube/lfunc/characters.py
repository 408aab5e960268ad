"""Primitive real Dirichlet characters and their Gauss sums."""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
from sympy import Poly, Symbol, cyclotomic_poly, factorint
from sympy.functions.combinatorial.numbers import kronecker_symbol

from ..errors import CharacterError

MAX_TWIST_CONDUCTOR = 20


@dataclass(frozen=True)
class DirichletCharacter:
    """A primitive character given by its value table mod the conductor."""

    conductor: int
    values: tuple
    label: str

    def __call__(self, n: int) -> int:
        return self.values[n % self.conductor]

    @property
    def is_trivial(self) -> bool:
        return self.conductor == 1

    @property
    def parity(self) -> int:
        """chi(-1)."""
        return self(-1)

    @property
    def is_real(self) -> bool:
        return all(v in (-1, 0, 1) for v in self.values)

    def conductor_exponent(self, p: int):
        """m with conductor = p^m, or None if the conductor is not a power of p."""
        if self.conductor == 1:
            return 0
        f = factorint(self.conductor)
        return f[p] if set(f) == {p} else None

    def gauss_sum(self, dps: int = 30):
        with mpmath.workdps(dps + 10):
            q = self.conductor
            g = mpmath.fsum(self(a) * mpmath.expjpi(mpmath.mpf(2 * a) / q) for a in range(q))
        return +g

    def gauss_sum_squared(self) -> int:
        """G(chi)^2 computed in Z[zeta_q]/(Phi_q); raises unless the result is rational."""
        q = self.conductor
        if q == 1:
            return 1
        g = [self(a) for a in range(q)]
        sq = [0] * q
        for a, x in enumerate(g):
            if x:
                for b, y in enumerate(g):
                    if y:
                        sq[(a + b) % q] += x * y
        phi = [int(c) for c in Poly(cyclotomic_poly(q, Symbol("x"))).all_coeffs()]
        # Remainder of sum sq[i] x^i modulo the monic cyclotomic polynomial.
        rem = sq[::-1]  # highest degree first
        deg = len(phi) - 1
        while len(rem) > deg:
            lead = rem[0]
            if lead:
                for i, c in enumerate(phi):
                    rem[i] -= lead * c
            rem.pop(0)
        if any(rem[:-1]):
            raise CharacterError(f"G(chi)^2 is not rational for {self.label}")
        return rem[-1] if rem else 0


def trivial_character() -> DirichletCharacter:
    return DirichletCharacter(1, (1,), "trivial")


def _is_fundamental_discriminant(d: int) -> bool:
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return all(e == 1 for e in factorint(abs(d)).values())
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and all(e == 1 for e in factorint(abs(m)).values())
    return False


def quadratic_character(discriminant: int, *, max_conductor: int = MAX_TWIST_CONDUCTOR) -> DirichletCharacter:
    """The Kronecker character (d/.) of a fundamental discriminant d, conductor |d|."""
    d = discriminant
    if not _is_fundamental_discriminant(d):
        raise CharacterError(f"{d} is not a fundamental discriminant")
    q = abs(d)
    if q > max_conductor:
        raise CharacterError(f"quadratic twists are supported for conductor <= {max_conductor}, got {q}")
    return DirichletCharacter(q, tuple(int(kronecker_symbol(d, n)) for n in range(q)), f"({d}/.)")


def quadratic_character_of_prime(p: int) -> DirichletCharacter:
    """The unique quadratic character of conductor p (odd prime)."""
    if p == 2 or factorint(p) != {p: 1}:
        raise CharacterError(f"{p} is not an odd prime")
    d = p if p % 4 == 1 else -p
    return quadratic_character(d, max_conductor=p)
