"""Fixed-precision p-adic arithmetic and the interpolation values of the p-adic L-function."""

from .interpolation import (
    DEFAULT_PREC,
    NOT_CONSTRUCTED,
    RESCALING_CAVEAT,
    InterpolationRecord,
    KummerReport,
    UnitRootData,
    euler_modification,
    interpolated_value,
    kummer_experiment,
    ramified_factor,
    unit_root,
    unramified_factors,
)
from .number import PAdicNumber, valuation

__all__ = [
    "DEFAULT_PREC",
    "NOT_CONSTRUCTED",
    "RESCALING_CAVEAT",
    "InterpolationRecord",
    "KummerReport",
    "PAdicNumber",
    "UnitRootData",
    "euler_modification",
    "interpolated_value",
    "kummer_experiment",
    "ramified_factor",
    "unit_root",
    "unramified_factors",
    "valuation",
]
