"""Irreducibility of Sym^3 of the standard SL_2(F_p)-module, by spinning.

The module is F_p^4 as row vectors, acted on from the right by the reductions
of sym3_matrix of the two elementary unipotents, which generate SL_2(F_p).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from sympy import Matrix

from .linalg import (
    left_nullspace_mod_p,
    nullspace_mod_p,
    require_prime,
    row_echelon_mod_p,
    transpose,
    vecmat_mod,
)
from .matrices import LOWER_UNIPOTENT, UNIPOTENT, sym3_matrix

SURROGATE_LABEL = "surrogate certificate: Sym^3 of the standard module of SL2(F_p)"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    p: int
    irreducible: bool
    # Echelon basis (rows) of a proper invariant subspace when reducible.
    witness: tuple | None
    method: str
    seeds_tried: int
    label: str = SURROGATE_LABEL


def generators_mod_p(p: int):
    return [sym3_matrix(UNIPOTENT).reduce(p).rows(), sym3_matrix(LOWER_UNIPOTENT).reduce(p).rows()]


def spin(seed, gens, p):
    """Echelon basis of the smallest subspace containing ``seed`` and stable under v -> v g."""
    basis, _ = row_echelon_mod_p([seed], p)
    if not basis:
        return []
    queue = [list(seed)]
    while queue:
        v = queue.pop()
        for g in gens:
            w = vecmat_mod(v, g, p)
            grown, _ = row_echelon_mod_p(basis + [w], p)
            if len(grown) > len(basis):
                basis = grown
                queue.append(w)
    return basis


def is_invariant(subspace, gens, p) -> bool:
    dim = len(row_echelon_mod_p(subspace, p)[0])
    for v in subspace:
        for g in gens:
            if len(row_echelon_mod_p(list(subspace) + [vecmat_mod(v, g, p)], p)[0]) != dim:
                return False
    return True


def _random_algebra_element(gens, p, rng):
    n = len(gens[0])
    words = [[[int(i == j) for j in range(n)] for i in range(n)]]
    for length in (1, 2, 3):
        for word in itertools.product(range(len(gens)), repeat=length):
            m = words[0]
            for idx in word:
                m = [[sum(m[i][t] * gens[idx][t][j] for t in range(n)) % p for j in range(n)] for i in range(n)]
            words.append(m)
    theta = [[0] * n for _ in range(n)]
    for w in words:
        c = rng.randrange(p)
        if c:
            theta = [[(theta[i][j] + c * w[i][j]) % p for j in range(n)] for i in range(n)]
    return theta


def _eigenvalues_mod_p(theta, p):
    """Roots in F_p of the characteristic polynomial of ``theta``."""
    coeffs = [int(c) % p for c in Matrix(theta).charpoly().all_coeffs()]
    roots = []
    for lam in range(p):
        acc = 0
        for c in coeffs:
            acc = (acc * lam + c) % p
        if acc == 0:
            roots.append(lam)
    return roots


def meataxe_irreducible_sym3(p: int, seed: int = 0, random_seeds: int = 50) -> IrreducibilityVerdict:
    """Decide whether Sym^3 of the standard SL_2(F_p)-module has a proper submodule.

    Spins the standard basis vectors and the null vectors of random algebra
    elements (shifted by one of their F_p-eigenvalues so the nullspace is
    nonzero); any spin of dimension 1..3 is returned as a witness.  When a
    random element with one-dimensional nullspace spins to the whole module
    and so does its transposed null vector in the dual, irreducibility is
    proved by Norton's criterion.
    """
    require_prime(p)
    gens = generators_mod_p(p)
    n = len(gens[0])
    rng = random.Random(seed)
    tried = 0

    def proper(vec):
        nonlocal tried
        tried += 1
        s = spin(vec, gens, p)
        return s if 0 < len(s) < n else None

    for i in range(n):
        w = proper([int(i == j) for j in range(n)])
        if w:
            return IrreducibilityVerdict(p, False, tuple(map(tuple, w)), "spin", tried)

    gens_t = [transpose(g) for g in gens]
    for _ in range(random_seeds):
        theta = _random_algebra_element(gens, p, rng)
        eigenvalues = _eigenvalues_mod_p(theta, p)
        if not eigenvalues:
            continue
        lam = eigenvalues[rng.randrange(len(eigenvalues))]
        theta = [[(theta[i][j] - lam * (i == j)) % p for j in range(n)] for i in range(n)]
        null = left_nullspace_mod_p(theta, p)
        for v in null:
            w = proper(v)
            if w:
                return IrreducibilityVerdict(p, False, tuple(map(tuple, w)), "spin", tried)
        if len(null) != 1:
            continue
        # Dual module: column vectors under g acting on the left, i.e. rows under g^T.
        dual_null = nullspace_mod_p(theta, p)
        tried += 1
        dual_span = spin(dual_null[0], gens_t, p)
        if len(dual_span) == n:
            return IrreducibilityVerdict(p, True, None, "norton", tried)
        # The annihilator of a proper dual submodule is a proper submodule.
        ann = nullspace_mod_p(dual_span, p)
        ech, _ = row_echelon_mod_p(ann, p)
        return IrreducibilityVerdict(p, False, tuple(map(tuple, ech)), "norton-dual", tried)
    return IrreducibilityVerdict(p, True, None, "spin-heuristic", tried)


def exhaustive_spin(p: int):
    """Spin every projective point of F_p^4 (oracle for small p); returns a proper subspace or None."""
    require_prime(p)
    gens = generators_mod_p(p)
    for lead in range(4):
        for tail in itertools.product(range(p), repeat=3 - lead):
            v = [0] * lead + [1] + list(tail)
            s = spin(v, gens, p)
            if len(s) < 4:
                return s
    return None
