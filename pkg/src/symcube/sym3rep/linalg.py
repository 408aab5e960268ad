"""Small dense linear algebra over F_p and Z."""

from __future__ import annotations

from sympy import Matrix, ZZ, isprime
from sympy.matrices.normalforms import smith_normal_form as _sympy_snf

from ..errors import NotPrimeError


def require_prime(p: int) -> None:
    if not isinstance(p, int) or p <= 1 or not isprime(p):
        raise NotPrimeError(f"{p!r} is not a prime")


def row_echelon_mod_p(rows, p):
    """Reduced row echelon form of ``rows`` over F_p; returns (nonzero rows, pivot columns)."""
    m = [[x % p for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][col], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank_mod_p(rows, p) -> int:
    return len(row_echelon_mod_p(rows, p)[0])


def nullspace_mod_p(rows, p):
    """Basis of {v : rows * v = 0} over F_p (column-vector convention)."""
    ech, pivots = row_echelon_mod_p(rows, p)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for row, pcol in zip(ech, pivots):
            v[pcol] = (-row[fcol]) % p
        basis.append(v)
    return basis


def left_nullspace_mod_p(rows, p):
    """Basis of {v : v * rows = 0} over F_p (row-vector convention)."""
    return nullspace_mod_p(transpose(rows), p)


def transpose(rows):
    return [list(c) for c in zip(*rows)]


def matmul_mod(a, b, p=None):
    n, m = len(a), len(b[0])
    out = [[sum(a[i][t] * b[t][j] for t in range(len(b))) for j in range(m)] for i in range(n)]
    if p is not None:
        out = [[x % p for x in r] for r in out]
    return out


def vecmat_mod(v, a, p):
    return [sum(v[t] * a[t][j] for t in range(len(v))) % p for j in range(len(a[0]))]


def smith_invariants(rows) -> list[int]:
    """Diagonal of the Smith normal form over Z (zeros included, non-negative)."""
    d = _sympy_snf(Matrix(rows), domain=ZZ)
    return [abs(int(d[i, i])) for i in range(min(d.shape))]
