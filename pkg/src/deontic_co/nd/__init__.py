"""Labeled natural deduction: derivations, checker, templates and transfer."""
from __future__ import annotations

from .checker import Checked, DerivationError, Reason, check_derivation, open_hypotheses
from .derivation import (
    GENERIC,
    WITNESS,
    Derivation,
    GenericSphere,
    Hyp,
    HypInc,
    Judgment,
    Node,
    Sphere,
    Witness,
    World,
    format_derivation,
    parse_derivation,
)
from .templates import TEMPLATE_IDS, MissingAux, check_all_axiom_templates, generate_template
from .transfer import NameCollision, NotClosed, rename_apart, transfer

__all__ = [
    "annotations",
    "check_all_axiom_templates",
    "check_derivation",
    "Checked",
    "Derivation",
    "DerivationError",
    "format_derivation",
    "generate_template",
    "GENERIC",
    "GenericSphere",
    "Hyp",
    "HypInc",
    "Judgment",
    "MissingAux",
    "NameCollision",
    "Node",
    "NotClosed",
    "open_hypotheses",
    "parse_derivation",
    "Reason",
    "rename_apart",
    "Sphere",
    "TEMPLATE_IDS",
    "transfer",
    "WITNESS",
    "Witness",
    "World",
]
