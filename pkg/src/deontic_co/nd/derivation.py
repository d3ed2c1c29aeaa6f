"""Derivation trees for the labeled natural-deduction calculus.

A judgment is a formula together with a context: a sequence of sphere and
world binders. In files, context items are written as bare tokens: names
starting with an upper-case letter are spheres (``N``), lower-case names are
worlds (``u``), ``bullet`` is the witness world and ``allsph`` the generic
sphere.

File syntax::

    (node <rule> (ctx <item>...) <formula> (discharge k)? <child>...)
    (hyp k <formula> (ctx <item>...))
    (hyp-inc k N (ctx <item>...))        ; ⊱N: current sphere is inside N
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Iterator

from ..sexpr import ParseError, SList, Symbol, read_one
from ..syntax import Formula, from_sexpr, print_formula, to_unicode

_SPHERE_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")
_WORLD_RE = re.compile(r"[a-z][a-z0-9_]*\Z")
_RESERVED = {"bullet", "allsph", "star", "circ"}


@dataclass(frozen=True)
class Sphere:
    name: str

    def __post_init__(self):
        if not _SPHERE_RE.match(self.name):
            raise ValueError(f"sphere names start with an upper-case letter: {self.name!r}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class World:
    name: str

    def __post_init__(self):
        if not _WORLD_RE.match(self.name) or self.name in _RESERVED:
            raise ValueError(f"world names are lower-case identifiers: {self.name!r}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Witness:
    """Some world of the current sphere (•)."""

    def __str__(self):
        return "bullet"


@dataclass(frozen=True)
class GenericSphere:
    """An arbitrary sphere (⊛)."""

    def __str__(self):
        return "allsph"


WITNESS = Witness()
GENERIC = GenericSphere()

ContextItem = Sphere | World | Witness | GenericSphere
Context = tuple  # of ContextItem


def item_names(ctx: Context) -> set[str]:
    return {it.name for it in ctx if isinstance(it, (Sphere, World))}


def is_sphere_item(it) -> bool:
    return isinstance(it, (Sphere, GenericSphere))


def render_context(ctx: Context) -> str:
    glyph = {Witness: "•", GenericSphere: "⊛"}
    return ",".join(glyph.get(type(it)) or str(it) for it in ctx) or "∅"


@dataclass(frozen=True)
class Judgment:
    formula: Formula
    context: Context = ()

    def __str__(self):
        return f"{to_unicode(self.formula)} @ {render_context(self.context)}"


@dataclass(frozen=True)
class Hyp:
    """Hypothesis leaf carrying a discharge index."""

    index: int
    formula: Formula
    context: Context = ()

    @property
    def judgment(self) -> Judgment:
        return Judgment(self.formula, self.context)


@dataclass(frozen=True)
class HypInc:
    """Nesting hypothesis ⊱outer: the current sphere (last context item) lies inside ``outer``."""

    index: int
    outer: str
    context: Context = ()


@dataclass(frozen=True)
class Node:
    rule: str
    context: Context
    formula: Formula
    premises: tuple = ()
    discharge: int | None = None

    @property
    def judgment(self) -> Judgment:
        return Judgment(self.formula, self.context)


Derivation = Node | Hyp | HypInc
Path = tuple  # of child indices, root = ()


def subtrees(d: Derivation, path: Path = ()) -> Iterator[tuple[Path, Derivation]]:
    """Every node and leaf, in preorder, with its path from ``d``."""
    yield path, d
    if isinstance(d, Node):
        for i, child in enumerate(d.premises):
            yield from subtrees(child, path + (i,))


def at(d: Derivation, path: Path) -> Derivation:
    for i in path:
        d = d.premises[i]
    return d


def replace_at(d: Derivation, path: Path, new: Derivation) -> Derivation:
    if not path:
        return new
    i, rest = path[0], path[1:]
    kids = list(d.premises)
    kids[i] = replace_at(kids[i], rest, new)
    return replace(d, premises=tuple(kids))


def map_contexts(d: Derivation, fn) -> Derivation:
    """Rebuild ``d`` with ``fn`` applied to every context and nesting hypothesis."""
    if isinstance(d, Hyp):
        return replace(d, context=fn(d.context))
    if isinstance(d, HypInc):
        new = fn(d.context + (Sphere(d.outer),))
        return replace(d, outer=new[-1].name, context=new[:-1])
    return replace(
        d,
        context=fn(d.context),
        premises=tuple(map_contexts(p, fn) for p in d.premises),
    )


def all_names(d: Derivation) -> set[str]:
    out: set[str] = set()
    for _, t in subtrees(d):
        out |= item_names(t.context)
        if isinstance(t, HypInc):
            out.add(t.outer)
    return out


def size(d: Derivation) -> int:
    return sum(1 for _ in subtrees(d))


# -- text format ---------------------------------------------------------------


def format_context(ctx: Context) -> str:
    return "(ctx" + "".join(f" {it}" for it in ctx) + ")"


def format_derivation(d: Derivation, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(d, Hyp):
        return f"{pad}(hyp {d.index} {print_formula(d.formula)} {format_context(d.context)})"
    if isinstance(d, HypInc):
        return f"{pad}(hyp-inc {d.index} {d.outer} {format_context(d.context)})"
    head = f"{pad}(node {d.rule} {format_context(d.context)} {print_formula(d.formula)}"
    if d.discharge is not None:
        head += f" (discharge {d.discharge})"
    if not d.premises:
        return head + ")"
    kids = "\n".join(format_derivation(p, indent + 1) for p in d.premises)
    return f"{head}\n{kids})"


def parse_derivation(text: str) -> Derivation:
    return _derivation(read_one(text))


def parse_context_item(tok: Symbol):
    t = tok.text
    if t == "bullet":
        return WITNESS
    if t == "allsph":
        return GENERIC
    try:
        return Sphere(t) if t[:1].isupper() else World(t)
    except ValueError:
        raise ParseError(tok.offset, "a context item (Sphere, world, bullet, allsph)", t) from None


def _context(e) -> Context:
    if not isinstance(e, SList) or e.head() != "ctx":
        raise ParseError(e.offset, "(ctx <item>...)", getattr(e, "text", "("))
    items = []
    for it in e.items[1:]:
        if not isinstance(it, Symbol):
            raise ParseError(it.offset, "a context item", "(")
        items.append(parse_context_item(it))
    return tuple(items)


def _int(e) -> int:
    if not isinstance(e, Symbol) or not e.text.isdigit():
        raise ParseError(e.offset, "a discharge index", getattr(e, "text", "("))
    return int(e.text)


def _derivation(e) -> Derivation:
    if not isinstance(e, SList) or not e.items:
        raise ParseError(e.offset, "(node ...), (hyp ...) or (hyp-inc ...)")
    head, args = e.head(), e.items[1:]
    if head == "hyp":
        if len(args) != 3:
            raise ParseError(e.offset, "(hyp k <formula> (ctx ...))")
        return Hyp(_int(args[0]), from_sexpr(args[1]), _context(args[2]))
    if head == "hyp-inc":
        if len(args) != 3 or not isinstance(args[1], Symbol):
            raise ParseError(e.offset, "(hyp-inc k N (ctx ...))")
        outer = parse_context_item(args[1])
        if not isinstance(outer, Sphere):
            raise ParseError(args[1].offset, "a sphere name", args[1].text)
        return HypInc(_int(args[0]), outer.name, _context(args[2]))
    if head == "node":
        if len(args) < 3 or not isinstance(args[0], Symbol):
            raise ParseError(e.offset, "(node <rule> (ctx ...) <formula> ...)")
        rule = args[0].text
        ctx = _context(args[1])
        formula = from_sexpr(args[2])
        rest = list(args[3:])
        discharge = None
        if rest and isinstance(rest[0], SList) and rest[0].head() == "discharge":
            if len(rest[0].items) != 2:
                raise ParseError(rest[0].offset, "(discharge k)")
            discharge = _int(rest[0].items[1])
            rest = rest[1:]
        return Node(rule, ctx, formula, tuple(_derivation(c) for c in rest), discharge)
    raise ParseError(e.offset, "node, hyp or hyp-inc", head or "(")


def render_tree(d: Derivation, indent: int = 0) -> str:
    """Indented human-readable view, conclusion first."""
    pad = "  " * indent
    if isinstance(d, Hyp):
        line = f"{pad}[{to_unicode(d.formula)}]^{d.index} @ {render_context(d.context)}"
    elif isinstance(d, HypInc):
        line = f"{pad}[⊱{d.outer}]^{d.index} @ {render_context(d.context)}"
    else:
        tag = d.rule + (f" /{d.discharge}" if d.discharge is not None else "")
        line = f"{pad}{d.judgment}    ({tag})"
    if isinstance(d, Node):
        return "\n".join([line] + [render_tree(p, indent + 1) for p in d.premises])
    return line
