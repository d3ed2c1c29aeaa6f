"""Axiom schemas A1–A8 of the CO system.

Metavariables are the upper-case atoms ``A``, ``B`` and ``C``; the concrete
grammar only admits lower-case atoms, so a metavariable can never be
confused with an object-level atom. ``≡`` is expanded to the conjunction of
both implications.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping

from .syntax import (
    BOT,
    TOP,
    And,
    Atom,
    Formula,
    Imp,
    Not,
    Obl,
    Or,
    Perm,
    children,
    iff,
    substitute,
)

A, B, C = Atom("A"), Atom("B"), Atom("C")
METAVARIABLES = ("A", "B", "C")

AXIOMS: dict[str, Formula] = {
    "A1": iff(Perm(A, C), Not(Obl(Not(A), C))),
    "A2": iff(Obl(And(A, B), C), And(Obl(A, C), Obl(B, C))),
    "A3": Imp(Obl(A, C), Perm(A, C)),
    "A4": Imp(Obl(TOP, C), Obl(C, C)),
    "A5": Imp(Obl(TOP, C), Obl(TOP, Or(B, C))),
    "A6": Imp(And(Obl(A, B), Obl(A, C)), Obl(A, Or(B, C))),
    "A7": Imp(And(Perm(BOT, C), Obl(A, Or(B, C))), Obl(A, B)),
    "A8": Imp(And(Perm(B, Or(B, C)), Obl(A, Or(B, C))), Obl(A, B)),
}

# Not a theorem: strengthening the condition of an obligation.
CONTROLS: dict[str, Formula] = {
    "strengthening": Imp(Obl(A, Or(B, C)), Obl(A, B)),
}


def metavariables(schema: Formula) -> tuple[str, ...]:
    """Metavariables of a schema, in A, B, C order."""
    found: set[str] = set()
    stack = [schema]
    while stack:
        f = stack.pop()
        if isinstance(f, Atom) and f.name in METAVARIABLES:
            found.add(f.name)
        stack.extend(children(f))
    return tuple(v for v in METAVARIABLES if v in found)


def instances(schema: Formula, pool: Iterable[Formula]) -> Iterator[tuple[dict[str, Formula], Formula]]:
    """Every instance of ``schema`` with its metavariables drawn from ``pool``."""
    pool = list(pool)
    names = metavariables(schema)
    for combo in itertools.product(pool, repeat=len(names)):
        bindings = dict(zip(names, combo))
        yield bindings, substitute(schema, bindings)


def match(pattern: Formula, f: Formula, bindings: Mapping[str, Formula] | None = None) -> dict[str, Formula] | None:
    """First-order structural matching of a schema against a formula."""
    out = dict(bindings or {})
    return out if _match(pattern, f, out) else None


def _match(p: Formula, f: Formula, out: dict[str, Formula]) -> bool:
    if isinstance(p, Atom) and p.name in METAVARIABLES:
        bound = out.get(p.name)
        if bound is None:
            out[p.name] = f
            return True
        return bound == f
    if type(p) is not type(f):
        return False
    pc, fc = children(p), children(f)
    if not pc:
        return p == f
    if getattr(p, "label", None) != getattr(f, "label", None):
        return False
    return all(_match(x, y, out) for x, y in zip(pc, fc))
