"""Certificate assembly: hypotheses, L-values, algebraic parts, interpolation data, conclusions."""

from __future__ import annotations

import json
import logging
import platform
from dataclasses import dataclass, field
from itertools import combinations

import gmpy2
import mpmath
import sympy

from .. import __version__
from ..errors import ReportRefusedError, SymcubeError
from ..lfunc import LFunction, algebraic_parts, critical_values, required_terms, root_number
from ..lfunc.afe import HEURISTIC_NOTE
from ..lfunc.algebraic import STABILITY_EXTRA_DIGITS, default_height
from ..modforms import cached_eigenform, check_supported_weight, eigenform
from ..padic import NOT_CONSTRUCTED, interpolated_value, kummer_experiment, unit_root
from ..padic.number import PAdicNumber
from .checklist import check_hypotheses

log = logging.getLogger(__name__)

SCHEMA = 1
TOP_LEVEL_KEYS = (
    "schema",
    "form",
    "prime",
    "checklist",
    "root_number",
    "critical_values",
    "algebraic_parts",
    "interpolation",
    "congruences",
    "conclusions",
    "caveats",
    "meta",
)
CAVEATS = (
    "period normalization: Omega^+ and Omega^- are fixed by declaring the algebraic part equal to 1 at the "
    "first critical point of each parity with a nonzero value; every algebraic part is relative to that choice",
    "root number: solved numerically from two splits of the approximate functional equation and recorded "
    "with its error radius; it is not assumed",
    "the modification factor in the interpolation formula is labelled R_p(Sym^2 f, rho, j) where it is "
    "defined as R_p(Sym^3 f, rho, j); it is read as the Sym^3 factor",
    "large-image hypothesis checked by a surrogate certificate: irreducibility of Sym^3 of the standard "
    "SL2(F_p)-module, not the Galois image itself",
    "the characters chi and rho in the algebraicity statement are taken to be the same character",
    HEURISTIC_NOTE,
)
OFF_CENTRE_NOTE = "automatic: L(Pi, s) has no zeros for Re(s) > 1 (off-centre critical point)"
CENTRE_NOTE = "central point: non-vanishing is not automatic"
CONDITIONAL = (
    "conditional on the rank-0 Bloch-Kato theorem for Sym^3 of level-1 eigenforms "
    "(p > 3, f ordinary at p, large image)"
)
IMC_CONTEXT = (
    "context only: the Iwasawa main conjecture divisibility (characteristic ideal of the Selmer complex "
    "divides the p-adic L-function) is not computed; the interpolation table and congruence checks are its "
    "computable shadow"
)


def conclusion_statement(j: int) -> str:
    return f"H^1_f(Q, V(-j-rho)) = 0 for j = {j}, rho trivial ({CONDITIONAL})"


def toolchain() -> dict:
    return {
        "symcube": __version__,
        "mpmath": mpmath.__version__,
        "sympy": sympy.__version__,
        "gmpy2": gmpy2.version(),
        "python": platform.python_version(),
    }


def padic_dict(x: PAdicNumber) -> dict:
    return {
        "p": x.p,
        "valuation": "inf" if x.is_zero else x.valuation,
        "unit": str(x.unit),
        "relative_precision": x.prec,
        "absolute_precision": "inf" if x.abs_prec == float("inf") else x.abs_prec,
    }


@dataclass
class Certificate:
    """Machine-readable certificate; ``data`` is exactly what gets serialized."""

    data: dict
    form: object = None
    lfunction: object = None
    algebraic: list = field(default_factory=list)
    checklist: object = None

    @property
    def status(self) -> str:
        return self.data["meta"]["status"]

    @property
    def conclusions(self) -> list:
        return self.data["conclusions"]

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2) + "\n"

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())


def _skeleton(k: int, p: int, digits: int, seed: int) -> dict:
    data = {key: None for key in TOP_LEVEL_KEYS}
    data.update(
        schema=SCHEMA,
        form={"weight": k, "level": 1},
        prime=p,
        critical_values=[],
        interpolation=None,
        congruences=[],
        conclusions=[],
        caveats=list(CAVEATS),
        meta={"status": "incomplete", "errors": [], "digits": digits, "seed": seed, "toolchain": toolchain()},
    )
    return data


def _record_error(data: dict, stage: str, exc: Exception) -> None:
    entry = {"stage": stage, "type": type(exc).__name__, "message": str(exc)}
    for attr in ("needed", "available"):
        if getattr(exc, attr, None) is not None:
            entry[attr] = getattr(exc, attr)
    data["meta"]["errors"].append(entry)
    log.warning("%s failed: %s", stage, exc)


def run_bk_certificate(k: int, p: int, digits: int = 30, seed: int = 0, n_terms: int | None = None,
                       cache_dir=None) -> Certificate:
    """Full pipeline for (k, p); stage errors yield status "incomplete" with the error recorded."""
    data = _skeleton(k, p, digits, seed)
    cert = Certificate(data)
    stage = "checklist"
    try:
        checklist = check_hypotheses(k, p, seed)
        cert.checklist = checklist
        data["checklist"] = checklist.to_dict()

        stage = "eigenform"
        check_supported_weight(k)
        stable_digits = digits + STABILITY_EXTRA_DIGITS
        n = n_terms or required_terms(k, stable_digits) + 16
        form = cached_eigenform(k, n, cache_dir) if cache_dir else eigenform(k, n)
        cert.form = form
        data["form"].update(terms=form.precision, a_p=str(form.a(p)) if p <= form.precision else None)

        stage = "root_number"
        L = LFunction(form)
        cert.lfunction = L
        eps = root_number(L, digits)
        data["root_number"] = eps.to_dict(digits)

        stage = "critical_values"
        values = critical_values(L, digits)
        rows = []
        for cp, ball in values:
            rows.append({
                "j_offset": cp.j_offset,
                "j_motivic": cp.j_motivic,
                "s": cp.s,
                "parity": cp.parity,
                "central": cp.is_central,
                "value": ball.to_dict(digits),
                "nonvanishing": not ball.contains_zero(),
                "annotation": CENTRE_NOTE if cp.is_central else OFF_CENTRE_NOTE,
            })
        data["critical_values"] = rows

        stage = "algebraic_parts"
        parts = algebraic_parts(L, values, digits)
        check = {a.point.j_offset: a.rational
                 for a in algebraic_parts(L, critical_values(L, stable_digits), stable_digits,
                                          max_height=default_height(digits))}
        cert.algebraic = parts
        data["algebraic_parts"] = {
            "tag": parts[0].tag if parts else None,
            "period_power": "(2 pi i)^(2 j)",
            "values": [
                {
                    "j_offset": a.point.j_offset,
                    "parity": a.point.parity,
                    "rational": None if a.rational is None else str(a.rational),
                    "residual": None if a.residual is None else mpmath.nstr(a.residual, 3),
                    "stable": a.rational is not None and check.get(a.point.j_offset) == a.rational,
                }
                for a in parts
            ],
        }

        stage = "conclusions"
        if checklist.all_pass():
            data["conclusions"] = [
                {"j_offset": row["j_offset"], "statement": conclusion_statement(row["j_offset"])}
                for row in rows
                if row["nonvanishing"]
            ]
        data["meta"]["status"] = "complete"
    except SymcubeError as exc:
        _record_error(data, stage, exc)
    return cert


def run_imc_report(k: int, p: int, digits: int = 60, M: int = 20, seed: int = 0, n_terms: int | None = None,
                   cache_dir=None, certificate: Certificate | None = None) -> Certificate:
    """Extend a passing certificate with interpolation records for every j and the congruence checks."""
    cert = certificate or run_bk_certificate(k, p, digits, seed, n_terms, cache_dir)
    data = cert.data
    if cert.status != "complete":
        raise ReportRefusedError("the underlying certificate is incomplete")
    if not cert.checklist.all_pass():
        failed = [name for name in ("p_greater_3", "ordinary", "weight_supported")
                  if not getattr(cert.checklist, name)]
        raise ReportRefusedError(f"hypothesis checklist does not pass ({', '.join(failed) or 'image checks'})")
    u = unit_root(cert.form.a(p), k, p, M)
    records = []
    skipped = []
    for a in cert.algebraic:
        if a.rational is None:
            skipped.append(a.point.j_offset)
            continue
        records.append(interpolated_value(u, a.point.j_offset, None, a.rational, a.tag))
    data["interpolation"] = {
        "prime": p,
        "precision": M,
        "unit_root": {"alpha": padic_dict(u.alpha), "beta": padic_dict(u.beta), "check": u.check()},
        "records": [
            {
                "j_offset": r.j_offset,
                "character": r.character,
                "factorial_factor": str(r.factorial_factor),
                "R_p": padic_dict(r.R_p),
                "R_p_factors": [padic_dict(x) for x in r.factors],
                "L_alg": str(r.L_alg),
                "Phi": padic_dict(r.Phi),
                "tag": r.tag,
                "flags": list(r.flags),
                "audit_ok": r.audit(),
            }
            for r in records
        ],
        "not_computed": {
            "unrecognized_L_alg": skipped,
            "twisted": "characters of conductor p^m, m >= 1: not computed (stretch path limited to p <= 7, "
                       "where no supported weight is ordinary)",
        },
        "notes": [NOT_CONSTRUCTED, IMC_CONTEXT],
    }
    congruences = []
    modulus = p - 1
    for r1, r2 in combinations(records, 2):
        if (r1.j_offset - r2.j_offset) % modulus == 0:
            rep = kummer_experiment(records, p, 1, (r1.j_offset, r2.j_offset))
            congruences.append({
                "pair": list(rep.pair),
                "level": rep.n,
                "modulus": rep.modulus,
                "rescale_exponent": rep.rescale_exponent,
                "difference_valuation": "inf" if rep.difference_valuation == float("inf")
                else rep.difference_valuation,
                "consistent": rep.consistent,
                "verdict": rep.verdict,
                "caveats": rep.caveats,
                "audit": rep.audit,
            })
    data["congruences"] = congruences
    data["meta"]["padic_precision"] = M
    return cert


def validate_certificate(data: dict) -> list:
    """Problems found in a certificate (empty list = valid)."""
    problems = []
    missing = [key for key in TOP_LEVEL_KEYS if key not in data]
    if missing:
        return [f"missing keys: {missing}"]
    if data["schema"] != SCHEMA:
        problems.append(f"unknown schema {data['schema']}")
    if not data["caveats"]:
        problems.append("caveat list is empty")
    status = data["meta"].get("status")
    if status not in ("complete", "incomplete"):
        problems.append(f"bad status {status!r}")
    rows = {row["j_offset"]: row for row in data["critical_values"]}
    passing = bool(data["checklist"]) and data["checklist"].get("all_pass", False)
    for c in data["conclusions"]:
        row = rows.get(c["j_offset"])
        if row is None or not row["nonvanishing"]:
            problems.append(f"conclusion at j={c['j_offset']} lacks a non-vanishing verdict")
        if not passing:
            problems.append(f"conclusion at j={c['j_offset']} without a passing checklist")
        if "conditional on" not in c["statement"]:
            problems.append(f"conclusion at j={c['j_offset']} is not labelled conditional")
    if passing and status == "complete":
        expected = {j for j, row in rows.items() if row["nonvanishing"]}
        if expected != {c["j_offset"] for c in data["conclusions"]}:
            problems.append("conclusions do not match the non-vanishing verdicts")
    for row in rows.values():
        if row["nonvanishing"] == _contains_zero(row["value"]):
            problems.append(f"non-vanishing verdict at j={row['j_offset']} contradicts its ball")
    return problems


def _contains_zero(ball: dict) -> bool:
    with mpmath.workdps(60):
        return abs(mpmath.mpc(ball["re"], ball["im"])) <= mpmath.mpf(ball["radius"])
