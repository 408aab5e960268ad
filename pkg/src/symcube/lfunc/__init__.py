"""Symmetric-cube L-functions: evaluation, critical values and algebraic parts."""

from .afe import LFunction, dirichlet_coefficients, required_terms, root_number
from .algebraic import AlgebraicValue, algebraic_parts, algebraic_quotients, algebraic_value, common_factor_check
from .ball import ErrorBall
from .characters import DirichletCharacter, quadratic_character, quadratic_character_of_prime, trivial_character
from .critical import (
    CriticalPoint,
    automorphic_to_motivic,
    complete_L,
    critical_points,
    critical_values,
    functional_equation_ratio,
    lvalues_json,
    motivic_to_unitary,
)
from .gamma import GammaFactor, gamma_c, gamma_factor
from .rationalize import rationalize

LFunctionInstance = LFunction

__all__ = [
    "AlgebraicValue",
    "CriticalPoint",
    "DirichletCharacter",
    "ErrorBall",
    "GammaFactor",
    "LFunction",
    "LFunctionInstance",
    "algebraic_parts",
    "algebraic_quotients",
    "algebraic_value",
    "automorphic_to_motivic",
    "common_factor_check",
    "complete_L",
    "critical_points",
    "critical_values",
    "dirichlet_coefficients",
    "functional_equation_ratio",
    "gamma_c",
    "gamma_factor",
    "lvalues_json",
    "motivic_to_unitary",
    "quadratic_character",
    "quadratic_character_of_prime",
    "rationalize",
    "required_terms",
    "root_number",
    "trivial_character",
]
