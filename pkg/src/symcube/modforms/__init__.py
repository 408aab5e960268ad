"""Exact level-1 modular forms: q-expansions, Eisenstein series, eigenforms."""

from .cache import cached_eigenform, read_coefficients, write_coefficients
from .forms import (
    SUPPORTED_WEIGHTS,
    Eigenform,
    check_supported_weight,
    cusp_space_dimension,
    delta,
    delta_eta,
    divisor_sigma_table,
    eigenform,
    eisenstein_series,
    is_ordinary,
    satisfies_ramanujan_bound,
    verify_multiplicativity,
)
from .qexp import QExpansion, kronecker_mul, schoolbook_mul

__all__ = [
    "SUPPORTED_WEIGHTS",
    "Eigenform",
    "QExpansion",
    "cached_eigenform",
    "check_supported_weight",
    "cusp_space_dimension",
    "delta",
    "delta_eta",
    "divisor_sigma_table",
    "eigenform",
    "eisenstein_series",
    "is_ordinary",
    "kronecker_mul",
    "read_coefficients",
    "satisfies_ramanujan_bound",
    "schoolbook_mul",
    "verify_multiplicativity",
    "write_coefficients",
]
