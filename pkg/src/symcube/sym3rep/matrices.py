"""The symmetric cube of 2x2 matrices and cokernel coranks of (tau - 1)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .linalg import matmul_mod, rank_mod_p, require_prime, smith_invariants

# Row i is the image of the i-th cubic monomial.
BASIS = ("x^3", "x^2y", "xy^2", "y^3")

UNIPOTENT = ((1, 1), (0, 1))
LOWER_UNIPOTENT = ((1, 0), (1, 1))


@dataclass(frozen=True)
class Sym3Matrix:
    """4x4 matrix of a substitution acting on cubic forms in the basis ``BASIS``.

    With ``modulus`` set the entries are residues mod that prime.
    """

    entries: tuple
    modulus: int | None = None

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("Sym3Matrix must be 4x4")
        if self.modulus is not None:
            rows = tuple(tuple(x % self.modulus for x in r) for r in rows)
        object.__setattr__(self, "entries", rows)

    def __matmul__(self, other):
        mod = self.modulus if self.modulus is not None else other.modulus
        return Sym3Matrix(tuple(map(tuple, matmul_mod(self.entries, other.entries, mod))), mod)

    def reduce(self, p: int) -> Sym3Matrix:
        return Sym3Matrix(self.entries, p)

    def rows(self):
        return [list(r) for r in self.entries]

    def det(self):
        from sympy import Matrix

        return Matrix(self.entries).det()

    @classmethod
    def identity(cls, modulus=None):
        return cls(tuple(tuple(int(i == j) for j in range(4)) for i in range(4)), modulus)


def sym3_matrix(m) -> Sym3Matrix:
    """Action of ``m = [[a, b], [c, d]]`` via x -> ax + by, y -> cx + dy on cubic monomials.

    Entry (i, j) is the coefficient of x^(3-j) y^j in (ax + by)^(3-i) (cx + dy)^i,
    so ``sym3_matrix(A @ B) == sym3_matrix(A) @ sym3_matrix(B)``.
    """
    (a, b), (c, d) = m
    out = [[0] * 4 for _ in range(4)]
    for i in range(4):
        r = 3 - i
        for u in range(r + 1):
            left = comb(r, u) * a ** (r - u) * b**u
            for v in range(i + 1):
                out[i][u + v] += left * comb(i, v) * c ** (i - v) * d**v
    return Sym3Matrix(tuple(map(tuple, out)))


def _shifted(M: Sym3Matrix, u: int):
    return [[u * M.entries[i][j] - (i == j) for j in range(4)] for i in range(4)]


def cokernel_corank(M: Sym3Matrix, p: int) -> int:
    """4 - rank_{F_p}(M - 1): minimal number of generators of the cokernel of M - 1 mod p."""
    require_prime(p)
    return 4 - rank_mod_p(_shifted(M, 1), p)


def twisted_cokernel_corank(M: Sym3Matrix, u: int, p: int) -> int:
    """Corank of u*M - 1 mod p, i.e. tau acting through a character with value u."""
    require_prime(p)
    if u % p == 0:
        raise ValueError(f"twist value {u} is not a unit mod {p}")
    return 4 - rank_mod_p(_shifted(M, u), p)


def cokernel_invariants(M: Sym3Matrix, u: int = 1) -> list[int]:
    """Smith invariants of u*M - 1 over Z (debug path cross-checking the F_p rank)."""
    return smith_invariants(_shifted(M, u))


def corank_from_smith(invariants, p: int) -> int:
    return sum(1 for d in invariants if d % p == 0)
