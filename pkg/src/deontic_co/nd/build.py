"""Smart constructors: each builds a node and infers its conclusion from the premises."""
from __future__ import annotations

from ..syntax import BOT, TOP, And, Formula, Imp, Label, Labeled, Not, Or
from .derivation import WITNESS, Context, Derivation, GenericSphere, Hyp, HypInc, Node, Sphere, World


def hyp(k: int, f: Formula, *ctx) -> Hyp:
    return Hyp(k, f, tuple(ctx))


def hyp_inc(k: int, outer: str, *ctx) -> HypInc:
    return HypInc(k, outer, tuple(ctx))


def premise(f: Formula, *ctx) -> Node:
    return Node("premise", tuple(ctx), f)


def weaken(d: Derivation, *extra) -> Node:
    return Node("weaken", tuple(d.context) + tuple(extra), d.formula, (d,))


def top_i(*ctx) -> Node:
    return Node("top-i", tuple(ctx), TOP)


def and_i(x: Derivation, y: Derivation) -> Node:
    return Node("and-i", x.context, And(x.formula, y.formula), (x, y))


def and_e(d: Derivation, side: int) -> Node:
    f = d.formula
    return Node("and-e", d.context, (f.left, f.right)[side], (d,))


def or_i(d: Derivation, other: Formula, *, left: bool = True) -> Node:
    f = Or(d.formula, other) if left else Or(other, d.formula)
    return Node("or-i", d.context, f, (d,))


def or_e(major: Derivation, m1: Derivation, m2: Derivation, k: int) -> Node:
    return Node("or-e", m1.context, m1.formula, (major, m1, m2), k)


def imp_i(d: Derivation, antecedent: Formula, k: int) -> Node:
    return Node("imp-i", d.context, Imp(antecedent, d.formula), (d,), k)


def imp_e(minor: Derivation, major: Derivation) -> Node:
    return Node("imp-e", minor.context, major.formula.right, (minor, major))


def not_i(d: Derivation, f: Formula, k: int) -> Node:
    return Node("not-i", d.context, Not(f), (d,), k)


def not_e(pos: Derivation, neg: Derivation, bot: Formula = BOT) -> Node:
    return Node("not-e", pos.context, bot, (pos, neg))


def efq(d: Derivation, f: Formula) -> Node:
    return Node("efq", d.context, f, (d,))


def raa(d: Derivation, f: Formula, k: int) -> Node:
    return Node("raa", d.context, f, (d,), k)


def circ_i(d: Derivation) -> Node:
    return Node("circ-i", d.context[:-1], Labeled(d.formula, Label.SOME_SPHERE), (d,))


def circ_e(major: Derivation, minor: Derivation, k: int) -> Node:
    return Node("circ-e", minor.context, minor.formula, (major, minor), k)


def bullet_i(d: Derivation) -> Node:
    return Node("bullet-i", d.context[:-1], Labeled(d.formula, Label.SOME_WORLD), (d,))


def bullet_e(major: Derivation, minor: Derivation, k: int) -> Node:
    return Node("bullet-e", minor.context, minor.formula, (major, minor), k)


def bullet_wit(d: Derivation) -> Node:
    return Node("bullet-wit", tuple(d.context) + (WITNESS,), d.formula.body, (d,))


def wit_i(d: Derivation) -> Node:
    return Node("wit-i", tuple(d.context[:-1]) + (WITNESS,), d.formula, (d,))


def bot_wit(d: Derivation, *ctx) -> Node:
    return Node("bot-wit", tuple(ctx), d.formula, (d,))


def star_i(d: Derivation) -> Node:
    return Node("star-i", d.context[:-1], Labeled(d.formula, Label.ALL_WORLDS), (d,))


def star_e(d: Derivation, world: World) -> Node:
    return Node("star-e", tuple(d.context) + (world,), d.formula.body, (d,))


def allsph_i(d: Derivation) -> Node:
    return Node("allsph-i", d.context[:-1], Labeled(d.formula, Label.ALL_SPHERES), (d,))


def allsph_e(d: Derivation, sphere: Sphere) -> Node:
    return Node("allsph-e", tuple(d.context) + (sphere,), d.formula.body, (d,))


def gen_inst(d: Derivation, sphere: Sphere) -> Node:
    ctx = list(d.context)
    i = next(i for i, it in enumerate(ctx) if isinstance(it, GenericSphere))
    ctx[i] = sphere
    return Node("gen-inst", tuple(ctx), d.formula, (d,))


def nest(case_inner: Derivation, case_outer: Derivation, k: int) -> Node:
    return Node("nest", case_inner.context, case_inner.formula, (case_inner, case_outer), k)


def mono_star(d: Derivation, inc: HypInc) -> Node:
    return Node("mono-star", inc.context, d.formula, (d, inc))


def mono_bullet(d: Derivation, inc: HypInc) -> Node:
    ctx: Context = tuple(inc.context[:-1]) + (Sphere(inc.outer),)
    return Node("mono-bullet", ctx, d.formula, (d, inc))
