"""Lifting a closed derivation into a fresh sphere/world context."""
from __future__ import annotations

import itertools

from .checker import open_hypotheses
from .derivation import Derivation, Node, Sphere, World, all_names, map_contexts, subtrees


class NameCollision(ValueError):
    pass


class NotClosed(ValueError):
    pass


def transfer(d: Derivation, sphere: str = "N", world: str = "u") -> Derivation:
    """Prefix every context of ``d`` with ``(sphere, world)``.

    ``d`` must be closed (no open hypotheses, no premise leaves), sit at the
    empty root context and avoid both names.
    """
    if tuple(d.context):
        raise ValueError("transfer expects a derivation at the empty context")
    if open_hypotheses(d) or any(isinstance(t, Node) and t.rule == "premise" for _, t in subtrees(d)):
        raise NotClosed("derivation has open hypotheses or premises")
    clash = all_names(d) & {sphere, world}
    if clash:
        raise NameCollision(f"{', '.join(sorted(clash))} already occur; rename_apart first")
    prefix = (Sphere(sphere), World(world))
    return map_contexts(d, lambda ctx: prefix + tuple(ctx))


def rename_apart(d: Derivation, avoid=("N", "u")) -> Derivation:
    """Rename bound names of ``d`` that occur in ``avoid``; the renaming is injective."""
    used = all_names(d)
    taken = used | set(avoid)
    mapping = {}
    for name in sorted(used & set(avoid)):
        fresh = next(f"{name}{i}" for i in itertools.count(1) if f"{name}{i}" not in taken)
        taken.add(fresh)
        mapping[name] = fresh
    if not mapping:
        return d

    def rename(ctx):
        out = []
        for it in ctx:
            if isinstance(it, Sphere) and it.name in mapping:
                it = Sphere(mapping[it.name])
            elif isinstance(it, World) and it.name in mapping:
                it = World(mapping[it.name])
            out.append(it)
        return tuple(out)

    return map_contexts(d, rename)
