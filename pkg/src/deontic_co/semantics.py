"""Finite sphere models and bounded validity checking.

A model is a finite set of worlds ``0..n_worlds-1`` with one global system of
spheres (a ⊆-chain), a valuation and a designated world. :func:`evaluate` is
the reference semantics. :func:`check_validity` runs the same semantics over
whole blocks of models at once with numpy; both walk models in the order of
:func:`enumerate_models`, so the first countermodel is the same either way.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import schemas
from .sexpr import ParseError, SList, Symbol, read_one
from .syntax import (
    And,
    Atom,
    BotN,
    BotW,
    Formula,
    Imp,
    Label,
    Labeled,
    Not,
    Obl,
    Or,
    Perm,
    TopN,
    atoms as formula_atoms,
    parse_formula,
)

DEFAULT_ATOMS = ("p", "q", "r")
DEFAULT_MAX_WORLDS = 3


class UnboundSphere(ValueError):
    """A world label (• or ∗) was evaluated with no current sphere."""


@dataclass(frozen=True)
class SphereModel:
    n_worlds: int
    spheres: tuple[frozenset[int], ...]
    valuation: Mapping[str, frozenset[int]] = field(default_factory=dict)
    designated: int = 0

    def __post_init__(self):
        if self.n_worlds < 1:
            raise ValueError("a model needs at least one world")
        worlds = frozenset(range(self.n_worlds))
        object.__setattr__(self, "spheres", tuple(frozenset(s) for s in self.spheres))
        object.__setattr__(self, "valuation", {a: frozenset(v) for a, v in self.valuation.items()})
        for s in self.spheres:
            if not s <= worlds:
                raise ValueError(f"sphere {sorted(s)} mentions unknown worlds")
        for inner, outer in zip(self.spheres, self.spheres[1:]):
            if not inner <= outer:
                raise ValueError("spheres must form a nested chain, innermost first")
        for a, v in self.valuation.items():
            if not v <= worlds:
                raise ValueError(f"valuation of {a} mentions unknown worlds")
        if self.designated not in worlds:
            raise ValueError("designated world is not a world of the model")

    @property
    def worlds(self) -> range:
        return range(self.n_worlds)

    def true_at(self, atom: str, world: int) -> bool:
        return world in self.valuation.get(atom, frozenset())


# -- reference evaluator -----------------------------------------------------


def evaluate(
    m: SphereModel,
    f: Formula,
    sphere: frozenset[int] | None = None,
    world: int | None = None,
) -> bool:
    """Truth of ``f`` in ``m``; by default at the designated world, no sphere."""
    return _ev(m, f, sphere, m.designated if world is None else world)


def _ev(m: SphereModel, f: Formula, sphere, world) -> bool:
    if isinstance(f, Atom):
        return m.true_at(f.name, world)
    if isinstance(f, TopN):
        return True
    if isinstance(f, (BotN, BotW)):
        return False
    if isinstance(f, Not):
        return not _ev(m, f.body, sphere, world)
    if isinstance(f, And):
        return _ev(m, f.left, sphere, world) and _ev(m, f.right, sphere, world)
    if isinstance(f, Or):
        return _ev(m, f.left, sphere, world) or _ev(m, f.right, sphere, world)
    if isinstance(f, Imp):
        return not _ev(m, f.left, sphere, world) or _ev(m, f.right, sphere, world)
    if isinstance(f, Labeled):
        if f.label is Label.SOME_SPHERE:
            return any(_ev(m, f.body, s, world) for s in m.spheres)
        if f.label is Label.ALL_SPHERES:
            return all(_ev(m, f.body, s, world) for s in m.spheres)
        if sphere is None:
            raise UnboundSphere(f"{f} needs a current sphere")
        if f.label is Label.SOME_WORLD:
            return any(_ev(m, f.body, sphere, w) for w in sorted(sphere))
        return all(_ev(m, f.body, sphere, w) for w in sorted(sphere))
    if isinstance(f, Obl):
        return _obligation(m, f.body, f.condition)
    if isinstance(f, Perm):
        return not _obligation(m, Not(f.body), f.condition)
    raise TypeError(f"not a formula: {f!r}")


def _obligation(m: SphereModel, body: Formula, condition: Formula) -> bool:
    # Global: the current world plays no part.
    for s in m.spheres:
        members = sorted(s)
        if any(_ev(m, condition, s, w) for w in members) and all(
            not _ev(m, condition, s, w) or _ev(m, body, s, w) for w in members
        ):
            return True
    return False


# -- enumeration ---------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def sphere_chains(n: int) -> tuple[tuple[int, ...], ...]:
    """Every strictly increasing chain of nonempty subsets of ``n`` worlds.

    Subsets are bitmasks. Chains are ordered by length, then by their
    bitmask tuples (innermost sphere first); the empty chain comes first.
    """
    full = (1 << n) - 1
    out: list[tuple[int, ...]] = []

    def grow(chain: tuple[int, ...]):
        out.append(chain)
        last = chain[-1] if chain else 0
        for mask in range(1, full + 1):
            if mask != last and mask & last == last:
                grow(chain + (mask,))

    grow(())
    return tuple(sorted(out, key=lambda c: (len(c), c)))


def _members(mask: int, n: int) -> frozenset[int]:
    return frozenset(w for w in range(n) if mask >> w & 1)


def enumerate_models(atoms: Sequence[str], max_worlds: int) -> Iterator[SphereModel]:
    """All models over ``atoms`` with 1..max_worlds worlds, in a fixed order.

    Order: world count, then valuation (first atom varies slowest, each
    atom's extension read as a bitmask), then sphere chain as in
    :func:`sphere_chains`, then designated world.
    """
    if max_worlds < 1:
        raise ValueError("max_worlds must be at least 1")
    atoms = tuple(atoms)
    for n in range(1, max_worlds + 1):
        chains = [tuple(_members(s, n) for s in chain) for chain in sphere_chains(n)]
        for masks in itertools.product(range(1 << n), repeat=len(atoms)):
            valuation = {a: _members(mk, n) for a, mk in zip(atoms, masks)}
            for chain in chains:
                for d in range(n):
                    yield SphereModel(n, chain, valuation, d)


def count_models(atoms: Sequence[str], max_worlds: int) -> int:
    k = len(atoms)
    return sum((1 << (n * k)) * len(sphere_chains(n)) * n for n in range(1, max_worlds + 1))


# -- vectorised evaluation ------------------------------------------------------


class _Block:
    """All models with a fixed world count, laid out as a (valuation, chain, world) grid.

    Every formula evaluates to a boolean array broadcastable to that grid;
    the last axis is the current world. Flattening the grid in C order gives
    exactly the enumeration order of :func:`enumerate_models`.
    """

    def __init__(self, atoms: tuple[str, ...], n: int):
        self.atoms = atoms
        self.n = n
        k = len(atoms)
        v = np.arange(1 << (n * k), dtype=np.int64)
        bits = np.arange(n)
        self.val = {}
        for i, a in enumerate(atoms):
            shift = n * (k - 1 - i)
            masks = (v >> shift) & ((1 << n) - 1)
            self.val[a] = ((masks[:, None] >> bits) & 1).astype(bool)[:, None, :]
        self.chains = sphere_chains(n)
        depth = max(len(c) for c in self.chains)
        self.depth = depth
        mem = np.zeros((len(self.chains), max(depth, 1), n), dtype=bool)
        valid = np.zeros((len(self.chains), max(depth, 1)), dtype=bool)
        for ci, chain in enumerate(self.chains):
            for ki, mask in enumerate(chain):
                valid[ci, ki] = True
                mem[ci, ki] = [(mask >> w) & 1 for w in range(n)]
        self.mem = [mem[None, :, ki, :] for ki in range(depth)]
        self.valid = [valid[None, :, ki, None] for ki in range(depth)]
        self.shape = (len(v), len(self.chains), n)
        self._cache: dict = {}

    def eval(self, f: Formula) -> np.ndarray:
        self._cache = {}
        return np.broadcast_to(self._ev(f, None), self.shape)

    def _ev(self, f: Formula, k: int | None) -> np.ndarray:
        key = (f, k)
        hit = self._cache.get(key)
        if hit is None:
            hit = self._cache[key] = self._compute(f, k)
        return hit

    def _compute(self, f: Formula, k):
        if isinstance(f, Atom):
            arr = self.val.get(f.name)
            return arr if arr is not None else np.zeros((1, 1, 1), dtype=bool)
        if isinstance(f, TopN):
            return np.ones((1, 1, 1), dtype=bool)
        if isinstance(f, (BotN, BotW)):
            return np.zeros((1, 1, 1), dtype=bool)
        if isinstance(f, Not):
            return ~self._ev(f.body, k)
        if isinstance(f, And):
            return self._ev(f.left, k) & self._ev(f.right, k)
        if isinstance(f, Or):
            return self._ev(f.left, k) | self._ev(f.right, k)
        if isinstance(f, Imp):
            return ~self._ev(f.left, k) | self._ev(f.right, k)
        if isinstance(f, Labeled):
            if f.label is Label.SOME_SPHERE:
                acc = np.zeros((1, 1, 1), dtype=bool)
                for ki in range(self.depth):
                    acc = acc | (self.valid[ki] & self._ev(f.body, ki))
                return acc
            if f.label is Label.ALL_SPHERES:
                acc = np.ones((1, 1, 1), dtype=bool)
                for ki in range(self.depth):
                    acc = acc & (~self.valid[ki] | self._ev(f.body, ki))
                return acc
            if k is None:
                raise UnboundSphere(f"{f} needs a current sphere")
            g = self._ev(f.body, k)
            if f.label is Label.SOME_WORLD:
                return np.any(self.mem[k] & g, axis=-1, keepdims=True)
            return np.all(~self.mem[k] | g, axis=-1, keepdims=True)
        if isinstance(f, Obl):
            return self._obligation(f.body, f.condition)
        if isinstance(f, Perm):
            return ~self._obligation(Not(f.body), f.condition)
        raise TypeError(f"not a formula: {f!r}")

    def _obligation(self, body, condition):
        acc = np.zeros((1, 1, 1), dtype=bool)
        for ki in range(self.depth):
            c = self._ev(condition, ki)
            a = self._ev(body, ki)
            exists = np.any(self.mem[ki] & c, axis=-1, keepdims=True)
            forall = np.all(~self.mem[ki] | ~c | a, axis=-1, keepdims=True)
            acc = acc | (self.valid[ki] & exists & forall)
        return acc

    def model(self, flat_index: int) -> SphereModel:
        vi, ci, d = np.unravel_index(flat_index, self.shape)
        n, k = self.n, len(self.atoms)
        valuation = {}
        for i, a in enumerate(self.atoms):
            mask = (int(vi) >> (n * (k - 1 - i))) & ((1 << n) - 1)
            valuation[a] = _members(mask, n)
        chain = tuple(_members(s, n) for s in self.chains[int(ci)])
        return SphereModel(n, chain, valuation, int(d))


@functools.lru_cache(maxsize=32)
def _block(atoms: tuple[str, ...], n: int) -> _Block:
    return _Block(atoms, n)


def truth_table(f: Formula, atoms: Sequence[str], n_worlds: int) -> np.ndarray:
    """Truth of ``f`` at the designated world of every model with ``n_worlds`` worlds.

    Returned flat, in enumeration order.
    """
    return _block(tuple(atoms), n_worlds).eval(f).ravel()


def check_validity(
    f: Formula,
    atoms: Sequence[str] = DEFAULT_ATOMS,
    max_worlds: int = DEFAULT_MAX_WORLDS,
) -> SphereModel | None:
    """First countermodel to ``f`` within the bounds, or None if there is none."""
    atoms = tuple(atoms)
    missing = formula_atoms(f) - set(atoms)
    if missing:
        raise ValueError(f"atoms {sorted(missing)} of the formula are not in the atom list")
    if max_worlds < 1:
        raise ValueError("max_worlds must be at least 1")
    for n in range(1, max_worlds + 1):
        block = _block(atoms, n)
        table = block.eval(f).ravel()
        if not table.all():
            return block.model(int(np.argmin(table)))
    return None


def is_valid(f: Formula, atoms: Sequence[str] = DEFAULT_ATOMS, max_worlds: int = DEFAULT_MAX_WORLDS) -> bool:
    return check_validity(f, atoms, max_worlds) is None


# -- axiom suite ---------------------------------------------------------------


def default_pool(atoms: Sequence[str] = DEFAULT_ATOMS) -> list[Formula]:
    return [Atom(a) for a in atoms] + [Not(Atom(a)) for a in atoms]


@dataclass
class SchemaResult:
    name: str
    schema: Formula
    expect_valid: bool
    instances: int = 0
    failures: list[tuple[dict[str, Formula], SphereModel]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures if self.expect_valid else bool(self.failures)


@dataclass
class SuiteReport:
    max_worlds: int
    atoms: tuple[str, ...]
    results: list[SchemaResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def result(self, name: str) -> SchemaResult:
        return next(r for r in self.results if r.name == name)

    def render(self) -> str:
        lines = [f"axiom suite (atoms: {' '.join(self.atoms)}; bounds: {self.max_worlds} worlds)"]
        for r in self.results:
            kind = "axiom" if r.expect_valid else "control"
            status = "pass" if r.passed else "FAIL"
            lines.append(
                f"{r.name}\t{kind}\t{status}\t{r.instances} instances\t{len(r.failures)} countermodels"
            )
            if r.failures and (not r.expect_valid or not r.passed):
                bindings, model = r.failures[0]
                shown = " ".join(f"{k}={v}" for k, v in bindings.items())
                lines.append(f"  first countermodel ({shown}): {format_model(model)}")
        return "\n".join(lines)


def axiom_validity_suite(
    max_worlds: int = DEFAULT_MAX_WORLDS,
    pool: Iterable[Formula] | None = None,
    atoms: Sequence[str] = DEFAULT_ATOMS,
    controls: bool = True,
) -> SuiteReport:
    """Check every instance of A1–A8 (and the non-axiom controls) by enumeration."""
    pool = default_pool(atoms) if pool is None else list(pool)
    entries = [(name, s, True) for name, s in schemas.AXIOMS.items()]
    if controls:
        entries += [(name, s, False) for name, s in schemas.CONTROLS.items()]
    results = []
    for name, schema, expect in entries:
        res = SchemaResult(name, schema, expect)
        for bindings, inst in schemas.instances(schema, pool):
            res.instances += 1
            cm = check_validity(inst, atoms, max_worlds)
            if cm is not None:
                res.failures.append((bindings, cm))
        results.append(res)
    return SuiteReport(max_worlds, tuple(atoms), results)


# -- model file format ---------------------------------------------------------


def format_model(m: SphereModel) -> str:
    """``(model (worlds n) (spheres (s ...) ...) (val p ...) ... (designated d))``"""
    spheres = " ".join("(s" + "".join(f" {w}" for w in sorted(s)) + ")" for s in m.spheres)
    vals = " ".join(
        f"(val {a}" + "".join(f" {w}" for w in sorted(m.valuation[a])) + ")" for a in sorted(m.valuation)
    )
    parts = [f"(worlds {m.n_worlds})", f"(spheres{' ' + spheres if spheres else ''})"]
    if vals:
        parts.append(vals)
    parts.append(f"(designated {m.designated})")
    return "(model " + " ".join(parts) + ")"


def parse_model(text: str) -> SphereModel:
    e = read_one(text)
    if not isinstance(e, SList) or e.head() != "model":
        raise ParseError(e.offset, "(model ...)")
    n = None
    spheres: list[frozenset[int]] = []
    valuation: dict[str, frozenset[int]] = {}
    designated = 0
    for part in e.items[1:]:
        head = part.head() if isinstance(part, SList) else None
        if head == "worlds":
            (n,) = _ints(part, 1, 1)
        elif head == "spheres":
            for s in part.items[1:]:
                if not isinstance(s, SList) or s.head() != "s":
                    raise ParseError(s.offset, "(s <world>...)")
                spheres.append(frozenset(_ints(s, 0)))
        elif head == "val":
            if len(part.items) < 2 or not isinstance(part.items[1], Symbol):
                raise ParseError(part.offset, "(val <atom> <world>...)")
            name = part.items[1].text
            parse_formula(name)
            valuation[name] = frozenset(_ints(part, 0, start=2))
        elif head == "designated":
            (designated,) = _ints(part, 1, 1)
        else:
            raise ParseError(part.offset, "worlds, spheres, val or designated")
    if n is None:
        raise ParseError(e.offset, "a (worlds n) entry")
    try:
        return SphereModel(n, tuple(spheres), valuation, designated)
    except ValueError as exc:
        raise ParseError(e.offset, f"a well-formed model ({exc})") from None


def _ints(e: SList, lo: int, hi: int | None = None, start: int = 1) -> list[int]:
    items = e.items[start:]
    if len(items) < lo or (hi is not None and len(items) > hi):
        raise ParseError(e.offset, f"{lo if hi == lo else 'a list of'} integer(s) in ({e.head()} ...)")
    out = []
    for it in items:
        if not isinstance(it, Symbol) or not it.text.isdigit():
            raise ParseError(it.offset, "a non-negative integer", getattr(it, "text", "("))
        out.append(int(it.text))
    return out
