"""Hypothesis checks, certificates and the command-line interface."""

from .certificate import (
    CAVEATS,
    SCHEMA,
    Certificate,
    conclusion_statement,
    run_bk_certificate,
    run_imc_report,
    validate_certificate,
)
from .checklist import HypothesisChecklist, check_hypotheses
from .selftest import selftest

__all__ = [
    "CAVEATS",
    "SCHEMA",
    "Certificate",
    "HypothesisChecklist",
    "check_hypotheses",
    "conclusion_statement",
    "run_bk_certificate",
    "run_imc_report",
    "selftest",
    "validate_certificate",
]
