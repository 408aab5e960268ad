"""Exact linear algebra of the symmetric-cube representation."""

from .euler import HodgeData, Sym3EulerFactor, euler_factor_numeric, euler_factor_sym3, hodge_data
from .linalg import rank_mod_p, smith_invariants
from .matrices import (
    BASIS,
    LOWER_UNIPOTENT,
    UNIPOTENT,
    Sym3Matrix,
    cokernel_corank,
    cokernel_invariants,
    corank_from_smith,
    sym3_matrix,
    twisted_cokernel_corank,
)
from .meataxe import IrreducibilityVerdict, exhaustive_spin, is_invariant, meataxe_irreducible_sym3, spin

__all__ = [
    "BASIS",
    "HodgeData",
    "IrreducibilityVerdict",
    "LOWER_UNIPOTENT",
    "Sym3EulerFactor",
    "Sym3Matrix",
    "UNIPOTENT",
    "cokernel_corank",
    "cokernel_invariants",
    "corank_from_smith",
    "euler_factor_numeric",
    "euler_factor_sym3",
    "exhaustive_spin",
    "hodge_data",
    "is_invariant",
    "meataxe_irreducible_sym3",
    "rank_mod_p",
    "smith_invariants",
    "spin",
    "sym3_matrix",
    "twisted_cokernel_corank",
]
