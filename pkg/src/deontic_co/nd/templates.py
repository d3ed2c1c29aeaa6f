"""Derivations of the CO rules R3, R4 and axioms A2–A8 in label form.

``T(x, y)`` below is the label form of O(y/x): ``(x^• ∧ (x → y)^∗)^⊚``. Every
template takes the three formulas substituted for A, B and C; templates that
do not mention one of them ignore it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from ..schemas import AXIOMS
from ..syntax import (
    BOT,
    BOT_W,
    TOP,
    And,
    Formula,
    Imp,
    Label,
    Not,
    Obl,
    Or,
    iff,
    lab,
    labeled_obligation,
    obligation_body,
    substitute,
    translate_deontic,
)
from .build import (
    and_e,
    and_i,
    bot_wit,
    bullet_e,
    bullet_i,
    bullet_wit,
    circ_e,
    circ_i,
    efq,
    gen_inst,
    hyp,
    hyp_inc,
    imp_e,
    imp_i,
    mono_star,
    nest,
    not_e,
    not_i,
    or_e,
    or_i,
    raa,
    star_e,
    star_i,
    top_i,
    weaken,
    wit_i,
)
from .checker import DerivationError, check_derivation
from .derivation import GENERIC, WITNESS, Derivation, Sphere, World

TEMPLATE_IDS = ("R3", "R4", "A2L", "A2R", "A3", "A4", "A5", "A6", "A7", "A8")

N, M = Sphere("N"), Sphere("M")
U = World("u")


class MissingAux(ValueError):
    """R3 and R4 need a derivation of the premise equivalence."""


def T(x: Formula, y: Formula) -> Formula:
    return labeled_obligation(y, x)


def body(x: Formula, y: Formula) -> Formula:
    return obligation_body(y, x)


def theorem(tid: str, a: Formula, b: Formula, c: Formula) -> Formula:
    """The CO formula a template derives (before translation)."""
    if tid == "R3":
        return Imp(Obl(a, c), Obl(b, c))
    if tid == "R4":
        return Imp(Obl(a, c), Obl(a, b))
    if tid in ("A2L", "A2R"):
        lhs, rhs = Obl(And(a, b), c), And(Obl(a, c), Obl(b, c))
        return Imp(lhs, rhs) if tid == "A2L" else Imp(rhs, lhs)
    if tid not in AXIOMS:
        raise ValueError(f"unknown template {tid!r}")
    return substitute(AXIOMS[tid], {"A": a, "B": b, "C": c})


def expected_root(tid: str, a: Formula, b: Formula, c: Formula) -> Formula:
    return translate_deontic(theorem(tid, a, b, c))


def aux_requirement(tid: str, a: Formula, b: Formula, c: Formula) -> Formula | None:
    """The equivalence R3/R4 need proved at context (N, u)."""
    if tid == "R3":
        return iff(a, b)
    if tid == "R4":
        return iff(b, c)
    return None


def generate_template(
    tid: str, a: Formula, b: Formula, c: Formula, aux: Derivation | None = None
) -> Derivation:
    builder = _BUILDERS.get(tid)
    if builder is None:
        raise ValueError(f"unknown template {tid!r}; expected one of {', '.join(TEMPLATE_IDS)}")
    need = aux_requirement(tid, a, b, c)
    if need is not None:
        if aux is None:
            raise MissingAux(f"{tid} needs a derivation of {need} at (N, u)")
        if aux.formula != need or tuple(aux.context) != (N, U):
            raise ValueError(f"aux must derive {need} at (N, u)")
        return builder(a, b, c, aux)
    return builder(a, b, c)


# -- rules ---------------------------------------------------------------------


def _r3(a, b, c, aux):
    ta = body(c, a)
    h2 = hyp(2, ta, N)
    c_to_a = weaken(star_e(and_e(weaken(h2), 1), U))
    a_u = imp_e(weaken(hyp(1, c, N, U)), c_to_a)
    b_u = imp_e(a_u, and_e(aux, 0))
    minor = circ_i(and_i(and_e(weaken(h2), 0), star_i(imp_i(b_u, c, 1))))
    return imp_i(circ_e(hyp(3, lab(ta, Label.SOME_SPHERE)), minor, 2), T(c, a), 3)


def _r4(a, b, c, aux):
    ta = body(c, a)
    h1 = hyp(1, ta, N)
    witness = bullet_wit(and_e(h1, 0))
    b_u = imp_e(hyp(3, c, N, U), and_e(aux, 1))
    b_bullet = bullet_e(witness, bullet_i(wit_i(b_u)), 3)
    c_u = imp_e(hyp(4, b, N, U), and_e(aux, 0))
    a_u = imp_e(c_u, star_e(and_e(h1, 1), U))
    pi1 = star_i(imp_i(a_u, b, 4))
    minor = circ_i(and_i(b_bullet, pi1))
    return imp_i(circ_e(hyp(2, T(c, a)), minor, 1), T(c, a), 2)


def _a2l(a, b, c):
    tab = body(c, And(a, b))

    def half(side):
        h1 = hyp(1, tab, N)
        ab = imp_e(hyp(3, c, N, U), star_e(and_e(h1, 1), U))
        star = star_i(imp_i(and_e(ab, side), c, 3))
        return circ_e(hyp(2, T(c, And(a, b))), circ_i(and_i(and_e(h1, 0), star)), 1)

    return imp_i(and_i(half(0), half(1)), T(c, And(a, b)), 2)


def _a2r(a, b, c):
    h1 = hyp(1, And(T(c, a), T(c, b)))
    h2 = hyp(2, body(c, a), N)
    h3 = hyp(3, body(c, b), M)

    def case(inner, inner_h, outer, outer_h, inner_is_a):
        inc = hyp_inc(4, outer.name, inner)
        own = and_e(inner_h, 1)
        carried = mono_star(and_e(outer_h, 1), inc)
        star_a, star_b = (own, carried) if inner_is_a else (carried, own)
        hc = hyp(5, c, inner, U)
        conj = and_i(imp_e(hc, star_e(star_a, U)), imp_e(hc, star_e(star_b, U)))
        return circ_i(and_i(and_e(inner_h, 0), star_i(imp_i(conj, c, 5))))

    split = nest(case(M, h3, N, h2, False), case(N, h2, M, h3, True), 4)
    inner = circ_e(and_e(h1, 1), split, 3)
    return imp_i(circ_e(and_e(h1, 0), inner, 2), h1.formula, 1)


def _a3(a, b, c):
    h1 = hyp(1, T(c, a))
    h2 = hyp(2, T(c, Not(a)))
    h3 = hyp(3, body(c, a), N)
    h4 = hyp(4, body(c, Not(a)), M)

    def case(inner, inner_h, outer, outer_h, inner_is_pos):
        inc = hyp_inc(5, outer.name, inner)
        own = and_e(inner_h, 1)
        carried = mono_star(and_e(outer_h, 1), inc)
        pos, neg = (own, carried) if inner_is_pos else (carried, own)
        hc = hyp(6, c, inner, U)
        clash = not_e(imp_e(hc, star_e(pos, U)), imp_e(hc, star_e(neg, U)))
        return bullet_e(bullet_wit(and_e(inner_h, 0)), bot_wit(wit_i(clash)), 6)

    split = nest(case(M, h4, N, h3, False), case(N, h3, M, h4, True), 5)
    bottom = circ_e(h1, circ_e(h2, split, 4), 3)
    return imp_i(not_i(bottom, T(c, Not(a)), 2), T(c, a), 1)


def _a4(a, b, c):
    h2 = hyp(2, body(c, TOP), N)
    cc = gen_inst(star_i(imp_i(hyp(1, c, GENERIC, U), c, 1)), N)
    minor = circ_i(and_i(and_e(h2, 0), cc))
    return imp_i(circ_e(hyp(3, T(c, TOP)), minor, 2), T(c, TOP), 3)


def _a5(a, b, c):
    bc = Or(b, c)
    h1 = hyp(1, body(c, TOP), N)
    some = bullet_i(or_i(bullet_wit(and_e(h1, 0)), b, left=False))
    every = star_i(imp_i(top_i(N, U), bc, 3))
    minor = circ_i(and_i(some, every))
    return imp_i(circ_e(hyp(2, T(c, TOP)), minor, 1), T(c, TOP), 2)


def _a6(a, b, c):
    bc = Or(b, c)
    h1 = hyp(1, And(T(b, a), T(c, a)))
    h2 = hyp(2, body(b, a), N)
    h3 = hyp(3, body(c, a), M)

    def case(inner, inner_h, outer, outer_h, inner_is_b):
        inc = hyp_inc(4, outer.name, inner)
        x = and_e(inner_h, 0)
        some = bullet_i(or_i(bullet_wit(x), c) if inner_is_b else or_i(bullet_wit(x), b, left=False))
        own = and_e(inner_h, 1)
        carried = mono_star(and_e(outer_h, 1), inc)
        star_b, star_c = (own, carried) if inner_is_b else (carried, own)
        via_b = imp_e(hyp(6, b, inner, U), star_e(star_b, U))
        via_c = imp_e(hyp(6, c, inner, U), star_e(star_c, U))
        every = star_i(imp_i(or_e(hyp(5, bc, inner, U), via_b, via_c, 6), bc, 5))
        return circ_i(and_i(some, every))

    split = nest(case(M, h3, N, h2, False), case(N, h2, M, h3, True), 4)
    inner = circ_e(and_e(h1, 1), split, 3)
    return imp_i(circ_e(and_e(h1, 0), inner, 2), h1.formula, 1)


def _star_via_disjunction(b, c, h2):
    """(b → a)^∗ @ N from ((b ∨ c) → a)^∗, the ∗ conjunct of ``h2``."""
    a_u = imp_e(or_i(hyp(4, b, N, U), c), star_e(and_e(h2, 1), U))
    return star_i(imp_i(a_u, b, 4))


def _a7(a, b, c):
    bc = Or(b, c)
    h1 = hyp(1, And(Not(T(c, Not(BOT))), T(bc, a)))
    h2 = hyp(2, body(bc, a), N)
    pi13 = circ_i(and_i(bullet_i(hyp(3, b, N, WITNESS)), _star_via_disjunction(b, c, h2)))
    never = star_i(imp_i(not_i(hyp(6, BOT, N, U), BOT, 6), c, 5))
    pi15 = circ_i(and_i(bullet_i(hyp(3, c, N, WITNESS)), never))
    pi14 = efq(not_e(pi15, and_e(h1, 0)), T(b, a))
    cases = or_e(bullet_wit(and_e(h2, 0)), pi13, pi14, 3)
    return imp_i(circ_e(and_e(h1, 1), cases, 2), h1.formula, 1)


def _a8(a, b, c):
    bc = Or(b, c)
    h1 = hyp(1, And(Not(T(bc, Not(b))), T(bc, a)))
    h2 = hyp(2, body(bc, a), N)
    x = lab(b, Label.SOME_WORLD)
    em = Or(x, Not(x))
    h7 = hyp(7, Not(em), N)
    not_x = not_i(not_e(or_i(hyp(8, x, N), Not(x)), h7, BOT_W), x, 8)
    pi18 = raa(not_e(or_i(not_x, x, left=False), h7, BOT_W), em, 7)
    pi19 = and_i(hyp(3, x, N), _star_via_disjunction(b, c, h2))
    h3n = hyp(3, Not(x), N)
    clash_u = weaken(not_e(bullet_i(wit_i(hyp(6, b, N, U))), h3n), U)
    pi21 = star_i(imp_i(not_i(clash_u, b, 6), bc, 5))
    refuted = not_e(circ_i(and_i(and_e(h2, 0), pi21)), and_e(h1, 0))
    pi20 = efq(weaken(refuted, N), body(b, a))
    minor = circ_i(or_e(pi18, pi19, pi20, 3))
    return imp_i(circ_e(and_e(h1, 1), minor, 2), h1.formula, 1)


_BUILDERS: dict[str, Callable[..., Derivation]] = {
    "R3": _r3,
    "R4": _r4,
    "A2L": _a2l,
    "A2R": _a2r,
    "A3": _a3,
    "A4": _a4,
    "A5": _a5,
    "A6": _a6,
    "A7": _a7,
    "A8": _a8,
}


# -- batch check ---------------------------------------------------------------


def and_commutation(x: Formula, y: Formula) -> Derivation:
    """Closed derivation of (x∧y → y∧x) ∧ (y∧x → x∧y) at the empty context."""

    def one_way(p, q, k):
        h = hyp(k, And(p, q))
        return imp_i(and_i(and_e(h, 1), and_e(h, 0)), And(p, q), k)

    return and_i(one_way(x, y, 1), one_way(y, x, 2))


def default_aux(tid: str, a: Formula, b: Formula, c: Formula) -> Derivation | None:
    """A ready-made aux when the R3/R4 equivalence is a commuted conjunction, else None."""
    from .transfer import transfer

    need = aux_requirement(tid, a, b, c)
    if need is None:
        return None
    x, y = need.left.left, need.left.right
    if isinstance(x, And) and y == And(x.right, x.left):
        return transfer(and_commutation(x.left, x.right))
    return None


def standard_instance(tid: str, a: Formula, b: Formula, c: Formula):
    """Arguments and aux used for a pool triple.

    R3 and R4 need a provable equivalence, so the pool triple is turned into
    one by commuting a conjunction: R3 runs at (a∧b, b∧a, c) and R4 at
    (a, b∧c, c∧b).
    """
    if tid == "R3":
        args = (And(a, b), And(b, a), c)
    elif tid == "R4":
        args = (a, And(b, c), And(c, b))
    else:
        return (a, b, c), None
    return args, default_aux(tid, *args)


@dataclass
class TemplateResult:
    tid: str
    checked: int = 0
    ok: int = 0
    failures: list = field(default_factory=list)
    roots: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.checked > 0 and self.ok == self.checked


@dataclass
class TemplateReport:
    results: dict[str, TemplateResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def render(self) -> str:
        rows = ["id\tok\tchecked"]
        rows += [f"{r.tid}\t{r.ok}\t{r.checked}" for r in self.results.values()]
        return "\n".join(rows)


def check_all_axiom_templates(pool: Iterable[Formula], ids: Iterable[str] = TEMPLATE_IDS) -> TemplateReport:
    pool = list(pool)
    results = {}
    for tid in ids:
        res = TemplateResult(tid)
        for a in pool:
            for b in pool:
                for c in pool:
                    args, aux = standard_instance(tid, a, b, c)
                    res.checked += 1
                    try:
                        d = generate_template(tid, *args, aux=aux)
                        got = check_derivation(d).conclusion
                        if got.formula != expected_root(tid, *args) or got.context:
                            raise ValueError(f"derived {got}, not the expected root")
                    except (DerivationError, ValueError) as exc:
                        res.failures.append((args, str(exc)))
                    else:
                        res.ok += 1
                        res.roots.append(got.formula)
        results[tid] = res
    return TemplateReport(results)


def fixture_derivation(tid: str) -> Derivation:
    """The shipped fixture for ``tid``: the template at atoms p, q, r (R3/R4 via commuted conjunctions)."""
    from ..syntax import Atom

    args, aux = standard_instance(tid, Atom("p"), Atom("q"), Atom("r"))
    return generate_template(tid, *args, aux=aux)
