"""Formula language: labeled propositional formulas with conditional obligation.

Concrete syntax is an s-expression grammar::

    atom     := [a-z][a-z0-9_]*
    formula  := atom | topn | botn | botw
              | (not f) | (and f f) | (or f f) | (imp f f)
              | (lab L f) | (O f f) | (P f f)
    L        := bullet | star | circ | allsph

``(O a b)`` reads "a is obligatory given b". A label sequence is a stack of
``Labeled`` wraps; the outermost wrap is the last label applied.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Mapping

from .sexpr import ParseError, SList, Symbol, read_one


class Label(enum.Enum):
    SOME_WORLD = "bullet"
    ALL_WORLDS = "star"
    SOME_SPHERE = "circ"
    ALL_SPHERES = "allsph"

    @property
    def glyph(self) -> str:
        return _GLYPHS[self]

    @property
    def world_level(self) -> bool:
        return self in (Label.SOME_WORLD, Label.ALL_WORLDS)


_GLYPHS = {
    Label.SOME_WORLD: "•",
    Label.ALL_WORLDS: "∗",
    Label.SOME_SPHERE: "⊚",
    Label.ALL_SPHERES: "⊛",
}


class Formula:
    """Base class. Concrete nodes are frozen dataclasses, so ``==`` is structural."""

    __slots__ = ()

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class TopN(Formula):
    pass


@dataclass(frozen=True)
class BotN(Formula):
    pass


@dataclass(frozen=True)
class BotW(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Labeled(Formula):
    body: Formula
    label: Label


@dataclass(frozen=True)
class Obl(Formula):
    body: Formula
    condition: Formula


@dataclass(frozen=True)
class Perm(Formula):
    body: Formula
    condition: Formula


TOP = TopN()
BOT = BotN()
BOT_W = BotW()

BINARY = (And, Or, Imp)
DEONTIC = (Obl, Perm)

_KEYWORDS = {"topn": TOP, "botn": BOT, "botw": BOT_W}
_BINARY_HEADS = {"and": And, "or": Or, "imp": Imp}
_BINARY_NAMES = {And: "and", Or: "or", Imp: "imp"}
_ATOM_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_RESERVED = set(_KEYWORDS) | set(_BINARY_HEADS) | {"not", "lab"} | {l.value for l in Label}


def is_falsum(f: Formula) -> bool:
    return isinstance(f, (BotN, BotW))


def iff(x: Formula, y: Formula) -> Formula:
    """``x ≡ y`` as surface syntax for ``(x → y) ∧ (y → x)``."""
    return And(Imp(x, y), Imp(y, x))


def split_iff(f: Formula) -> tuple[Formula, Formula] | None:
    """Inverse of :func:`iff`; None when ``f`` is not a biconditional expansion."""
    if (
        isinstance(f, And)
        and isinstance(f.left, Imp)
        and isinstance(f.right, Imp)
        and f.left.left == f.right.right
        and f.left.right == f.right.left
    ):
        return f.left.left, f.left.right
    return None


def lab(f: Formula, *labels: Label) -> Formula:
    """Apply labels left to right; the last one ends up outermost."""
    for label in labels:
        f = Labeled(f, label)
    return f


def obligation_body(body: Formula, condition: Formula) -> Formula:
    """Sphere-level clause of O(body/condition): ``c^• ∧ (c → body)^∗``."""
    return And(Labeled(condition, Label.SOME_WORLD), Labeled(Imp(condition, body), Label.ALL_WORLDS))


def labeled_obligation(body: Formula, condition: Formula) -> Formula:
    """``(c^• ∧ (c → body)^∗)^⊚``, the label form of O(body/condition)."""
    return Labeled(obligation_body(body, condition), Label.SOME_SPHERE)


def translate_deontic(f: Formula) -> Formula:
    """Rewrite every O/P into its label form. Other constructors are kept."""
    if isinstance(f, Obl):
        return labeled_obligation(translate_deontic(f.body), translate_deontic(f.condition))
    if isinstance(f, Perm):
        return Not(labeled_obligation(Not(translate_deontic(f.body)), translate_deontic(f.condition)))
    if isinstance(f, Not):
        return Not(translate_deontic(f.body))
    if isinstance(f, BINARY):
        return type(f)(translate_deontic(f.left), translate_deontic(f.right))
    if isinstance(f, Labeled):
        return Labeled(translate_deontic(f.body), f.label)
    return f


def substitute(schema: Formula, bindings: Mapping[str, Formula]) -> Formula:
    """Simultaneous substitution of atoms by formulas."""
    if isinstance(schema, Atom):
        return bindings.get(schema.name, schema)
    if isinstance(schema, Not):
        return Not(substitute(schema.body, bindings))
    if isinstance(schema, BINARY):
        return type(schema)(substitute(schema.left, bindings), substitute(schema.right, bindings))
    if isinstance(schema, Labeled):
        return Labeled(substitute(schema.body, bindings), schema.label)
    if isinstance(schema, DEONTIC):
        return type(schema)(substitute(schema.body, bindings), substitute(schema.condition, bindings))
    return schema


def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, (Not, Labeled)):
        return (f.body,)
    if isinstance(f, BINARY):
        return (f.left, f.right)
    if isinstance(f, DEONTIC):
        return (f.body, f.condition)
    return ()


def atoms(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {f.name}
    out: set[str] = set()
    for c in children(f):
        out |= atoms(c)
    return out


def has_deontic(f: Formula) -> bool:
    return isinstance(f, DEONTIC) or any(has_deontic(c) for c in children(f))


def depends_on_sphere(f: Formula) -> bool:
    """True if a •/∗ label occurs outside every sphere binder (⊚, ⊛, O, P).

    Such a formula needs a current sphere to be evaluated, and its value can
    change when the current sphere does.
    """
    if isinstance(f, Labeled):
        if f.label.world_level:
            return True
        return False
    if isinstance(f, DEONTIC):
        return False
    return any(depends_on_sphere(c) for c in children(f))


def depends_on_world(f: Formula) -> bool:
    """True if an atom occurs outside every world binder (•, ∗, O, P)."""
    if isinstance(f, Atom):
        return True
    if isinstance(f, Labeled) and f.label.world_level:
        return False
    if isinstance(f, DEONTIC):
        return False
    return any(depends_on_world(c) for c in children(f))


def size(f: Formula) -> int:
    return 1 + sum(size(c) for c in children(f))


# -- concrete syntax ---------------------------------------------------------


def print_formula(f: Formula) -> str:
    """Canonical s-expression text; inverse of :func:`parse_formula`."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, TopN):
        return "topn"
    if isinstance(f, BotN):
        return "botn"
    if isinstance(f, BotW):
        return "botw"
    if isinstance(f, Not):
        return f"(not {print_formula(f.body)})"
    if isinstance(f, BINARY):
        return f"({_BINARY_NAMES[type(f)]} {print_formula(f.left)} {print_formula(f.right)})"
    if isinstance(f, Labeled):
        return f"(lab {f.label.value} {print_formula(f.body)})"
    if isinstance(f, Obl):
        return f"(O {print_formula(f.body)} {print_formula(f.condition)})"
    if isinstance(f, Perm):
        return f"(P {print_formula(f.body)} {print_formula(f.condition)})"
    raise TypeError(f"not a formula: {f!r}")


def parse_formula(text: str) -> Formula:
    return from_sexpr(read_one(text))


def from_sexpr(e) -> Formula:
    if isinstance(e, Symbol):
        if e.text in _KEYWORDS:
            return _KEYWORDS[e.text]
        if _ATOM_RE.match(e.text) and e.text not in _RESERVED:
            return Atom(e.text)
        raise ParseError(e.offset, "an atom or constant", e.text)
    if not isinstance(e, SList) or not e.items:
        raise ParseError(e.offset, "a connective")
    head = e.head()
    args = e.items[1:]
    if head == "not":
        _arity(e, 1)
        return Not(from_sexpr(args[0]))
    if head in _BINARY_HEADS:
        _arity(e, 2)
        return _BINARY_HEADS[head](from_sexpr(args[0]), from_sexpr(args[1]))
    if head == "lab":
        _arity(e, 2)
        tag = args[0]
        try:
            label = Label(tag.text) if isinstance(tag, Symbol) else None
        except ValueError:
            label = None
        if label is None:
            raise ParseError(tag.offset, "a label (bullet, star, circ, allsph)", _show(tag))
        return Labeled(from_sexpr(args[1]), label)
    if head in ("O", "P"):
        _arity(e, 2)
        cls = Obl if head == "O" else Perm
        return cls(from_sexpr(args[0]), from_sexpr(args[1]))
    first = e.items[0]
    raise ParseError(first.offset, "a connective (not, and, or, imp, lab, O, P)", _show(first))


def _arity(e: SList, n: int) -> None:
    got = len(e.items) - 1
    if got < n:
        raise ParseError(e.end, f"{n - got} more argument(s) to {e.head()}", ")")
    if got > n:
        extra = e.items[n + 1]
        raise ParseError(extra.offset, f"')' closing {e.head()}", _show(extra))


def _show(e) -> str:
    return e.text if isinstance(e, Symbol) else "("


# -- human-readable rendering -----------------------------------------------

_INFIX = {And: "∧", Or: "∨", Imp: "→"}


def to_unicode(f: Formula) -> str:
    """Infix rendering with superscript-style labels, for reports only."""
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, TopN):
        return "⊤n"
    if isinstance(f, BotN):
        return "⊥n"
    if isinstance(f, BotW):
        return "⊥w"
    if isinstance(f, Not):
        return "¬" + _wrap(f.body)
    if isinstance(f, BINARY):
        return f"{_wrap(f.left)} {_INFIX[type(f)]} {_wrap(f.right)}"
    if isinstance(f, Labeled):
        return _wrap(f.body) + "^" + f.label.glyph
    if isinstance(f, Obl):
        return f"O({to_unicode(f.body)}/{to_unicode(f.condition)})"
    if isinstance(f, Perm):
        return f"P({to_unicode(f.body)}/{to_unicode(f.condition)})"
    raise TypeError(f"not a formula: {f!r}")


def _wrap(f: Formula) -> str:
    s = to_unicode(f)
    return f"({s})" if isinstance(f, BINARY) else s
