"""Rule-by-rule checker for labeled natural-deduction derivations.

Context semantics, read left to right: a sphere item sets the current
sphere, a world item picks a world of the current sphere, ``bullet`` stands
for *some* world of the current sphere and ``allsph`` for an arbitrary
sphere. A judgment at a witness context (ending in ``bullet``) is an
existential claim, so only rules that are monotone in a single premise may
read or produce it.

Names are scoped: a sphere or world name is usable only below the rule that
binds it (⊚-elimination, •-elimination, ∗-introduction) or when it occurs in
the root context. A world is bound together with the context prefix it
belongs to, so ``u`` bound inside sphere ``N`` cannot be reused as a member
of ``M``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from ..syntax import (
    TOP,
    And,
    Imp,
    Label,
    Labeled,
    Not,
    Or,
    depends_on_sphere,
    depends_on_world,
    is_falsum,
)
from .derivation import (
    Context,
    Derivation,
    GenericSphere,
    Hyp,
    HypInc,
    Judgment,
    Node,
    Path,
    Sphere,
    Witness,
    World,
    item_names,
    subtrees,
)

# ⊱N at a context ending in sphere M reads "M ⊆ N". Flip to False for the
# converse reading; the two monotonicity rules then trade directions.
INCLUSION_MEANS_SUBSET = True


class Reason(enum.Enum):
    BAD_CONTEXT = "BadContext"
    FRESHNESS_VIOLATION = "FreshnessViolation"
    UNDISCHARGED_HYPOTHESIS = "UndischargedHypothesis"
    RULE_SHAPE_MISMATCH = "RuleShapeMismatch"
    UNKNOWN_RULE = "UnknownRule"


class DerivationError(Exception):
    def __init__(self, path: Path, reason: Reason, detail: str = ""):
        self.path = tuple(path)
        self.reason = reason
        self.detail = detail
        where = "/".join(map(str, self.path)) or "root"
        super().__init__(f"at {where}: {reason.value}" + (f" ({detail})" if detail else ""))


@dataclass(frozen=True)
class Checked:
    """A derivation that passed: its conclusion and the schematic premises it rests on."""

    conclusion: Judgment
    premises: tuple[Judgment, ...] = ()


# rule -> number of premises
ARITY = {
    "premise": 0, "top-i": 0,
    "weaken": 1, "and-e": 1, "or-i": 1, "imp-i": 1, "not-i": 1, "efq": 1, "raa": 1,
    "circ-i": 1, "bullet-i": 1, "bullet-wit": 1, "wit-i": 1, "bot-wit": 1,
    "star-i": 1, "star-e": 1, "allsph-i": 1, "allsph-e": 1, "gen-inst": 1,
    "and-i": 2, "imp-e": 2, "not-e": 2, "circ-e": 2, "bullet-e": 2,
    "nest": 2, "mono-star": 2, "mono-bullet": 2,
    "or-e": 3,
}
RULES = frozenset(ARITY)

# Children whose open hypotheses a discharge index may close.
DISCHARGE_SCOPE = {
    "imp-i": (0,), "not-i": (0,), "raa": (0,),
    "or-e": (1, 2), "circ-e": (1,), "bullet-e": (1,), "nest": (0, 1),
}

# Rules that may conclude at a witness context, and (rule, child) slots that
# may consume a premise at one.
_AT_WITNESS = {"weaken", "and-e", "or-i", "or-e", "wit-i", "bullet-wit"}
_FROM_WITNESS = {
    ("weaken", 0), ("and-e", 0), ("or-i", 0), ("or-e", 0), ("or-e", 1), ("or-e", 2),
    ("bullet-i", 0), ("bullet-e", 0), ("bot-wit", 0),
}
_INCLUSION_SLOTS = {("mono-star", 1), ("mono-bullet", 1)}

_SPHERE = "sphere"


def _ends_witness(ctx: Context) -> bool:
    return bool(ctx) and isinstance(ctx[-1], Witness)


def _leaf_names(leaf) -> set[str]:
    names = item_names(leaf.context)
    if isinstance(leaf, HypInc):
        names.add(leaf.outer)
    return names


def open_hypotheses(d: Derivation) -> list[tuple[Path, Hyp | HypInc]]:
    """Hypothesis leaves of ``d`` not closed by any discharge inside ``d``, in preorder."""
    return _open_table(d)[()]


def _open_table(d: Derivation) -> dict[Path, list]:
    table: dict[Path, list] = {}

    def walk(t, path):
        if isinstance(t, (Hyp, HypInc)):
            table[path] = [(path, t)]
            return table[path]
        out = []
        scope = DISCHARGE_SCOPE.get(t.rule, ())
        for i, child in enumerate(t.premises):
            for lp, leaf in walk(child, path + (i,)):
                if t.discharge is not None and i in scope and leaf.index == t.discharge:
                    continue
                out.append((lp, leaf))
        table[path] = out
        return out

    walk(d, ())
    return table


def check_derivation(d: Derivation) -> Checked:
    """Validate ``d``; raise :class:`DerivationError` at the first failing node in preorder."""
    return _Checker(d).run()


def is_ok(d: Derivation) -> bool:
    try:
        check_derivation(d)
    except DerivationError:
        return False
    return True


class _Checker:
    def __init__(self, root: Derivation):
        self.root = root
        self.open = _open_table(root)

    def run(self) -> Checked:
        root_scope = {}
        for i, it in enumerate(self.root.context):
            if isinstance(it, Sphere):
                root_scope[it.name] = _SPHERE
            elif isinstance(it, World):
                root_scope[it.name] = tuple(self.root.context[:i])
        stack = [((), self.root, root_scope)]
        premises = []
        while stack:
            path, t, scope = stack.pop()
            binds = self.node(path, t, scope)
            if isinstance(t, Node):
                if t.rule == "premise":
                    premises.append(t.judgment)
                for i in reversed(range(len(t.premises))):
                    child_scope = scope
                    if i in binds:
                        child_scope = {**scope, **binds[i]}
                    stack.append((path + (i,), t.premises[i], child_scope))
        leftover = self.open[()]
        if leftover:
            lp, leaf = leftover[0]
            raise DerivationError(lp, Reason.UNDISCHARGED_HYPOTHESIS, f"hypothesis {leaf.index} is never discharged")
        if isinstance(self.root, HypInc):
            raise DerivationError((), Reason.RULE_SHAPE_MISMATCH, "a nesting hypothesis is not a judgment")
        return Checked(self.root.judgment, tuple(premises))

    # -- helpers -------------------------------------------------------------

    @staticmethod
    def fail(path, reason: Reason, detail: str = ""):
        raise DerivationError(path, reason, detail)

    def shape(self, path, detail: str):
        self.fail(path, Reason.RULE_SHAPE_MISMATCH, detail)

    def bad_ctx(self, path, detail: str):
        self.fail(path, Reason.BAD_CONTEXT, detail)

    def closed(self, path, t: Node) -> dict[int, list]:
        """Leaves closed by ``t``'s discharge index, per child."""
        out: dict[int, list] = {}
        if t.discharge is None:
            return out
        for i in DISCHARGE_SCOPE.get(t.rule, ()):
            out[i] = [
                (lp, leaf) for lp, leaf in self.open[path + (i,)] if leaf.index == t.discharge
            ]
        return out

    def expect_closed(self, path, leaves, want: Judgment):
        for lp, leaf in leaves:
            if not isinstance(leaf, Hyp) or leaf.judgment != want:
                self.shape(path, f"hypothesis discharged at {'/'.join(map(str, lp))} is not {want}")

    def open_names(self, path) -> set[str]:
        names: set[str] = set()
        for _, leaf in self.open[path]:
            names |= _leaf_names(leaf)
        return names

    def fresh(self, path, name: str, scope, *, avoid: set[str], what: str):
        if name in scope:
            self.fail(path, Reason.FRESHNESS_VIOLATION, f"{what} {name} is already bound")
        if name in avoid:
            self.fail(path, Reason.FRESHNESS_VIOLATION, f"{what} {name} occurs in the conclusion, the major premise or an open hypothesis")

    def eigen(self, path, leaves, prefix: Context, kind: type) -> str | None:
        """The single name ``x`` such that every leaf sits at ``prefix·x``."""
        names = set()
        for _, leaf in leaves:
            ctx = leaf.context
            if len(ctx) != len(prefix) + 1 or tuple(ctx[:-1]) != tuple(prefix) or not isinstance(ctx[-1], kind):
                self.shape(path, "discharged hypothesis is not at the expected context")
            names.add(ctx[-1].name)
        if len(names) > 1:
            self.shape(path, f"discharged hypotheses disagree on the bound name: {sorted(names)}")
        return names.pop() if names else None

    # -- per node ------------------------------------------------------------

    def well_formed(self, path, t, scope):
        ctx = t.context
        seen_sphere = False
        for i, it in enumerate(ctx):
            if isinstance(it, Witness):
                if i != len(ctx) - 1:
                    self.bad_ctx(path, "bullet must be the last context item")
                if not seen_sphere:
                    self.bad_ctx(path, "bullet needs a preceding sphere")
            elif isinstance(it, World):
                if not seen_sphere:
                    self.bad_ctx(path, f"world {it.name} needs a preceding sphere")
                if scope.get(it.name) != tuple(ctx[:i]):
                    self.bad_ctx(path, f"world {it.name} is not bound in this position")
            elif isinstance(it, Sphere):
                seen_sphere = True
                if scope.get(it.name) != _SPHERE:
                    self.bad_ctx(path, f"sphere {it.name} is not bound here")
            else:
                seen_sphere = True
        if isinstance(t, HypInc):
            if not ctx or not isinstance(ctx[-1], Sphere):
                self.bad_ctx(path, "a nesting hypothesis needs a named current sphere")
            if scope.get(t.outer) != _SPHERE:
                self.bad_ctx(path, f"sphere {t.outer} is not bound here")
            if t.outer == ctx[-1].name:
                self.bad_ctx(path, "a sphere cannot be nested in itself")
        elif depends_on_sphere(t.formula) and not seen_sphere:
            self.bad_ctx(path, "world-level labels need a current sphere")

    def node(self, path, t, scope) -> dict[int, dict]:
        self.well_formed(path, t, scope)
        if not isinstance(t, Node):
            return {}
        rule = t.rule
        if rule not in RULES:
            self.fail(path, Reason.UNKNOWN_RULE, rule)
        if len(t.premises) != ARITY[rule]:
            self.shape(path, f"{rule} takes {ARITY[rule]} premise(s), got {len(t.premises)}")
        if t.discharge is not None and rule not in DISCHARGE_SCOPE:
            self.shape(path, f"{rule} discharges nothing")
        for i, p in enumerate(t.premises):
            if isinstance(p, HypInc) != ((rule, i) in _INCLUSION_SLOTS):
                self.shape(path, f"premise {i} of {rule} has the wrong kind")
            if _ends_witness(p.context) and (rule, i) not in _FROM_WITNESS:
                self.bad_ctx(path, f"{rule} cannot use a premise at a witness context")
        if _ends_witness(t.context) and rule not in _AT_WITNESS:
            self.bad_ctx(path, f"{rule} cannot conclude at a witness context")
        check = getattr(self, "rule_" + rule.replace("-", "_"))
        return check(path, t, scope) or {}

    # -- rules ---------------------------------------------------------------

    def rule_premise(self, path, t, scope):
        pass

    def rule_top_i(self, path, t, scope):
        if t.formula != TOP:
            self.shape(path, "top-i concludes topn")

    def rule_weaken(self, path, t, scope):
        (p,) = t.premises
        if p.formula != t.formula:
            self.shape(path, "weaken keeps the formula")
        n = len(p.context)
        if tuple(t.context[:n]) != tuple(p.context):
            self.bad_ctx(path, "weaken only appends context items")
        for it in t.context[n:]:
            if isinstance(it, Witness):
                self.bad_ctx(path, "weaken cannot add bullet")
            if isinstance(it, World) and depends_on_world(t.formula):
                self.bad_ctx(path, "formula depends on the current world")
            if isinstance(it, (Sphere, GenericSphere)) and depends_on_sphere(t.formula):
                self.bad_ctx(path, "formula depends on the current sphere")

    def same_context(self, path, t, *idx):
        for i in idx:
            if tuple(t.premises[i].context) != tuple(t.context):
                self.bad_ctx(path, f"premise {i} is at a different context")

    def rule_and_i(self, path, t, scope):
        self.same_context(path, t, 0, 1)
        if t.formula != And(t.premises[0].formula, t.premises[1].formula):
            self.shape(path, "and-i concludes the conjunction of its premises")

    def rule_and_e(self, path, t, scope):
        self.same_context(path, t, 0)
        f = t.premises[0].formula
        if not isinstance(f, And) or t.formula not in (f.left, f.right):
            self.shape(path, "and-e concludes a conjunct of its premise")

    def rule_or_i(self, path, t, scope):
        self.same_context(path, t, 0)
        if not isinstance(t.formula, Or) or t.premises[0].formula not in (t.formula.left, t.formula.right):
            self.shape(path, "or-i concludes a disjunction containing its premise")

    def rule_or_e(self, path, t, scope):
        major, m1, m2 = t.premises
        if not isinstance(major.formula, Or):
            self.shape(path, "or-e needs a disjunction as its first premise")
        self.same_context(path, t, 1, 2)
        if m1.formula != t.formula or m2.formula != t.formula:
            self.shape(path, "or-e minors must conclude the conclusion")
        closed = self.closed(path, t)
        self.expect_closed(path, closed.get(1, ()), Judgment(major.formula.left, major.context))
        self.expect_closed(path, closed.get(2, ()), Judgment(major.formula.right, major.context))

    def rule_imp_i(self, path, t, scope):
        self.same_context(path, t, 0)
        if not isinstance(t.formula, Imp) or t.formula.right != t.premises[0].formula:
            self.shape(path, "imp-i concludes X → (premise)")
        self.expect_closed(path, self.closed(path, t).get(0, ()), Judgment(t.formula.left, t.context))

    def rule_imp_e(self, path, t, scope):
        self.same_context(path, t, 0, 1)
        a, b = (p.formula for p in t.premises)
        if b != Imp(a, t.formula) and a != Imp(b, t.formula):
            self.shape(path, "imp-e needs X and X → (conclusion)")

    def rule_not_i(self, path, t, scope):
        self.same_context(path, t, 0)
        if not isinstance(t.formula, Not) or not is_falsum(t.premises[0].formula):
            self.shape(path, "not-i concludes ¬X from a falsum")
        self.expect_closed(path, self.closed(path, t).get(0, ()), Judgment(t.formula.body, t.context))

    def rule_not_e(self, path, t, scope):
        self.same_context(path, t, 0, 1)
        a, b = (p.formula for p in t.premises)
        if not is_falsum(t.formula) or (b != Not(a) and a != Not(b)):
            self.shape(path, "not-e concludes a falsum from X and ¬X")

    def rule_efq(self, path, t, scope):
        self.same_context(path, t, 0)
        if not is_falsum(t.premises[0].formula):
            self.shape(path, "efq needs a falsum")

    def rule_raa(self, path, t, scope):
        self.same_context(path, t, 0)
        if not is_falsum(t.premises[0].formula):
            self.shape(path, "raa needs a falsum")
        self.expect_closed(path, self.closed(path, t).get(0, ()), Judgment(Not(t.formula), t.context))

    def rule_circ_i(self, path, t, scope):
        (p,) = t.premises
        ctx = p.context
        if not ctx or not isinstance(ctx[-1], Sphere):
            self.bad_ctx(path, "circ-i needs a premise at a named sphere")
        if tuple(ctx[:-1]) != tuple(t.context):
            self.bad_ctx(path, "circ-i drops exactly the last sphere")
        if t.formula != Labeled(p.formula, Label.SOME_SPHERE):
            self.shape(path, "circ-i concludes (premise)^⊚")

    def rule_circ_e(self, path, t, scope):
        major, minor = t.premises
        f = major.formula
        if not (isinstance(f, Labeled) and f.label is Label.SOME_SPHERE):
            self.shape(path, "circ-e needs a ⊚-formula as major premise")
        self.same_context(path, t, 1)
        if minor.formula != t.formula:
            self.shape(path, "circ-e concludes what the minor concludes")
        leaves = self.closed(path, t).get(1, [])
        name = self.eigen(path, leaves, major.context, Sphere)
        if name is None:
            return {}
        self.expect_closed(path, leaves, Judgment(f.body, tuple(major.context) + (Sphere(name),)))
        avoid = item_names(major.context) | item_names(t.context) | self.open_names(path)
        self.fresh(path, name, scope, avoid=avoid, what="sphere")
        return {1: {name: _SPHERE}}

    def rule_bullet_i(self, path, t, scope):
        (p,) = t.premises
        ctx = p.context
        if len(ctx) < 2 or not isinstance(ctx[-1], (World, Witness)) or not isinstance(ctx[-2], (Sphere, GenericSphere)):
            self.bad_ctx(path, "bullet-i needs a premise at a world of a sphere")
        if tuple(ctx[:-1]) != tuple(t.context):
            self.bad_ctx(path, "bullet-i drops exactly the world")
        if t.formula != Labeled(p.formula, Label.SOME_WORLD):
            self.shape(path, "bullet-i concludes (premise)^•")

    def rule_bullet_e(self, path, t, scope):
        major, minor = t.premises
        ctx = tuple(major.context)
        if _ends_witness(ctx):
            body, base = major.formula, ctx[:-1]
        elif isinstance(major.formula, Labeled) and major.formula.label is Label.SOME_WORLD:
            body, base = major.formula.body, ctx
        else:
            self.shape(path, "bullet-e needs X^• or X at a witness context")
        if not base or not isinstance(base[-1], (Sphere, GenericSphere)):
            self.bad_ctx(path, "bullet-e needs a current sphere")
        self.same_context(path, t, 1)
        if minor.formula != t.formula:
            self.shape(path, "bullet-e concludes what the minor concludes")
        leaves = self.closed(path, t).get(1, [])
        name = self.eigen(path, leaves, base, World)
        if name is None:
            return {}
        self.expect_closed(path, leaves, Judgment(body, base + (World(name),)))
        avoid = item_names(ctx) | item_names(t.context) | self.open_names(path)
        self.fresh(path, name, scope, avoid=avoid, what="world")
        return {1: {name: base}}

    def rule_bullet_wit(self, path, t, scope):
        (p,) = t.premises
        f = p.formula
        if not (isinstance(f, Labeled) and f.label is Label.SOME_WORLD) or t.formula != f.body:
            self.shape(path, "bullet-wit unwraps X^•")
        if not p.context or not isinstance(p.context[-1], (Sphere, GenericSphere)):
            self.bad_ctx(path, "bullet-wit needs a premise at a sphere")
        if tuple(t.context) != tuple(p.context) + (Witness(),):
            self.bad_ctx(path, "bullet-wit appends bullet")

    def rule_wit_i(self, path, t, scope):
        (p,) = t.premises
        if p.formula != t.formula:
            self.shape(path, "wit-i keeps the formula")
        if not p.context or not isinstance(p.context[-1], World):
            self.bad_ctx(path, "wit-i needs a premise at a named world")
        if tuple(t.context) != tuple(p.context[:-1]) + (Witness(),):
            self.bad_ctx(path, "wit-i replaces the world by bullet")

    def rule_bot_wit(self, path, t, scope):
        (p,) = t.premises
        if not is_falsum(p.formula) or not is_falsum(t.formula):
            self.shape(path, "bot-wit moves a falsum")
        if not _ends_witness(p.context):
            self.bad_ctx(path, "bot-wit needs a premise at a witness context")
        base = tuple(p.context[:-1])
        if tuple(t.context) != base[: len(t.context)]:
            self.bad_ctx(path, "bot-wit concludes at a prefix of the premise context")

    def rule_star_i(self, path, t, scope):
        (p,) = t.premises
        ctx = tuple(p.context)
        if len(ctx) < 2 or not isinstance(ctx[-1], World) or not isinstance(ctx[-2], (Sphere, GenericSphere)):
            self.bad_ctx(path, "star-i needs a premise at a world of a sphere")
        if ctx[:-1] != tuple(t.context):
            self.bad_ctx(path, "star-i drops exactly the world")
        if t.formula != Labeled(p.formula, Label.ALL_WORLDS):
            self.shape(path, "star-i concludes (premise)^∗")
        name = ctx[-1].name
        self.fresh(path, name, scope, avoid=item_names(ctx[:-1]) | self.open_names(path + (0,)), what="world")
        return {0: {name: ctx[:-1]}}

    def rule_star_e(self, path, t, scope):
        (p,) = t.premises
        f = p.formula
        if not (isinstance(f, Labeled) and f.label is Label.ALL_WORLDS) or t.formula != f.body:
            self.shape(path, "star-e unwraps X^∗")
        ctx = tuple(t.context)
        if not ctx or not isinstance(ctx[-1], World) or ctx[:-1] != tuple(p.context):
            self.bad_ctx(path, "star-e appends one world")
        if not p.context or not isinstance(p.context[-1], (Sphere, GenericSphere)):
            self.bad_ctx(path, "star-e needs a premise at a sphere")

    def no_generic_open(self, path, child: Path, rule: str):
        for _, leaf in self.open[child]:
            if any(isinstance(it, GenericSphere) for it in leaf.context):
                self.fail(path, Reason.FRESHNESS_VIOLATION, f"{rule}: an open hypothesis mentions allsph")

    def rule_allsph_i(self, path, t, scope):
        (p,) = t.premises
        if not p.context or not isinstance(p.context[-1], GenericSphere) or tuple(p.context[:-1]) != tuple(t.context):
            self.bad_ctx(path, "allsph-i needs a premise at allsph")
        if t.formula != Labeled(p.formula, Label.ALL_SPHERES):
            self.shape(path, "allsph-i concludes (premise)^⊛")
        self.no_generic_open(path, path + (0,), "allsph-i")

    def rule_allsph_e(self, path, t, scope):
        (p,) = t.premises
        f = p.formula
        if not (isinstance(f, Labeled) and f.label is Label.ALL_SPHERES) or t.formula != f.body:
            self.shape(path, "allsph-e unwraps X^⊛")
        ctx = tuple(t.context)
        if not ctx or not isinstance(ctx[-1], Sphere) or ctx[:-1] != tuple(p.context):
            self.bad_ctx(path, "allsph-e appends one named sphere")

    def rule_gen_inst(self, path, t, scope):
        (p,) = t.premises
        if p.formula != t.formula:
            self.shape(path, "gen-inst keeps the formula")
        src, dst = tuple(p.context), tuple(t.context)
        diff = [i for i, (x, y) in enumerate(zip(src, dst)) if x != y]
        if (
            len(src) != len(dst)
            or len(diff) != 1
            or not isinstance(src[diff[0]], GenericSphere)
            or not isinstance(dst[diff[0]], Sphere)
        ):
            self.bad_ctx(path, "gen-inst replaces one allsph by a named sphere")
        self.no_generic_open(path, path + (0,), "gen-inst")

    def rule_nest(self, path, t, scope):
        self.same_context(path, t, 0, 1)
        if t.premises[0].formula != t.formula or t.premises[1].formula != t.formula:
            self.shape(path, "both cases of nest conclude the conclusion")
        closed = self.closed(path, t)
        cases = []
        for i in (0, 1):
            for _, leaf in closed.get(i, ()):
                if not isinstance(leaf, HypInc):
                    self.shape(path, "nest discharges nesting hypotheses only")
                if not leaf.context or not isinstance(leaf.context[-1], Sphere):
                    self.bad_ctx(path, "a nesting hypothesis needs a named current sphere")
                cases.append((i, tuple(leaf.context[:-1]), leaf.context[-1].name, leaf.outer))
        pairs = {(base, inner, outer) if i == 0 else (base, outer, inner) for i, base, inner, outer in cases}
        if len(pairs) > 1:
            self.shape(path, "nest cases disagree on the two spheres")

    def mono(self, path, t, label: Label, forward: bool):
        x, inc = t.premises
        glyph = label.glyph
        if not (isinstance(x.formula, Labeled) and x.formula.label is label) or t.formula != x.formula:
            self.shape(path, f"premise must be the conclusion, an X^{glyph}")
        named = [c for c in (x.context, t.context, inc.context) if c and isinstance(c[-1], Sphere)]
        if len(named) != 3:
            self.bad_ctx(path, "monotonicity relates two named spheres")
        if tuple(inc.context[:-1]) != tuple(x.context[:-1]) or tuple(t.context[:-1]) != tuple(x.context[:-1]):
            self.bad_ctx(path, "premises and conclusion must share the context prefix")
        inner, outer = inc.context[-1].name, inc.outer
        if not INCLUSION_MEANS_SUBSET:
            inner, outer = outer, inner
        src, dst = (outer, inner) if forward else (inner, outer)
        if x.context[-1].name != src or t.context[-1].name != dst:
            self.bad_ctx(path, f"X^{glyph} moves from sphere {src} to {dst} here")

    def rule_mono_star(self, path, t, scope):
        self.mono(path, t, Label.ALL_WORLDS, forward=True)

    def rule_mono_bullet(self, path, t, scope):
        self.mono(path, t, Label.SOME_WORLD, forward=False)


def declared_premises(d: Derivation) -> list[tuple[Path, Node]]:
    return [(p, t) for p, t in subtrees(d) if isinstance(t, Node) and t.rule == "premise"]
