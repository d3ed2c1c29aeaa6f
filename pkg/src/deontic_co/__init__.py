"""Conditional obligation (CO) over sphere models: syntax, semantics and proof checkers."""
from __future__ import annotations

from .hilbert import ProofError, check_proof, is_tautology, parse_proof
from .schemas import AXIOMS, CONTROLS
from .semantics import (
    SphereModel,
    axiom_validity_suite,
    check_validity,
    enumerate_models,
    evaluate,
    format_model,
    parse_model,
)
from .sexpr import ParseError
from .syntax import Formula, parse_formula, print_formula, translate_deontic

__version__ = "0.1.0"

__all__ = [
    "annotations",
    "axiom_validity_suite",
    "AXIOMS",
    "check_proof",
    "check_validity",
    "CONTROLS",
    "enumerate_models",
    "evaluate",
    "format_model",
    "Formula",
    "is_tautology",
    "parse_formula",
    "parse_model",
    "parse_proof",
    "ParseError",
    "print_formula",
    "ProofError",
    "SphereModel",
    "translate_deontic",
]
