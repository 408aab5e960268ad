"""Hypotheses of the rank-0 Bloch-Kato theorem for Sym^3, checked for a concrete (k, p)."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from sympy import isprime

from ..modforms import SUPPORTED_WEIGHTS, eigenform, is_ordinary
from ..sym3rep import UNIPOTENT, cokernel_corank, meataxe_irreducible_sym3, sym3_matrix


@dataclass
class HypothesisChecklist:
    k: int
    p: int
    level_is_1: bool
    p_greater_3: bool
    ordinary: bool
    weight_supported: bool
    surrogate_irreducibility: dict
    corank_check: dict
    notes: list = field(default_factory=list)

    def all_pass(self) -> bool:
        return (
            self.level_is_1
            and self.p_greater_3
            and self.ordinary
            and self.weight_supported
            and bool(self.surrogate_irreducibility.get("irreducible"))
            and bool(self.corank_check.get("passes"))
        )

    def to_dict(self) -> dict:
        out = asdict(self)
        out["all_pass"] = self.all_pass()
        return out


def check_hypotheses(k: int, p: int, seed: int = 0) -> HypothesisChecklist:
    """Run the ordinarity, corank and surrogate irreducibility checks; failures become verdicts."""
    notes = []
    prime = isprime(p)
    if not prime:
        notes.append(f"{p} is not prime")
    supported = k in SUPPORTED_WEIGHTS
    ordinary = False
    if not supported:
        notes.append(f"weight {k} is not one of {SUPPORTED_WEIGHTS}")
    elif prime:
        ordinary = is_ordinary(eigenform(k, p + 1), p)
    if prime:
        corank = cokernel_corank(sym3_matrix(UNIPOTENT), p)
        verdict = meataxe_irreducible_sym3(p, seed=seed)
        irreducibility = {
            "p": p,
            "irreducible": verdict.irreducible,
            "method": verdict.method,
            "witness": [list(v) for v in verdict.witness] if verdict.witness else None,
            "label": verdict.label,
        }
    else:
        corank = None
        irreducibility = {"p": p, "irreducible": False, "method": "not run", "witness": None, "label": ""}
    return HypothesisChecklist(
        k=k,
        p=p,
        level_is_1=True,
        p_greater_3=prime and p > 3,
        ordinary=ordinary,
        weight_supported=supported,
        surrogate_irreducibility=irreducibility,
        corank_check={"matrix": "Sym^3 [[1,1],[0,1]]", "corank": corank, "passes": corank == 1},
        notes=notes,
    )
