"""Formula generators and independent oracles shared by the test modules."""
from __future__ import annotations

import itertools
import random
from pathlib import Path

from hypothesis import strategies as st

from deontic_co.hilbert import MP, AxiomRef, CongBody, CongCondition, HilbertProof, Line, parse_proof
from deontic_co.syntax import (
    BOT,
    BOT_W,
    TOP,
    And,
    Atom,
    Imp,
    Label,
    Labeled,
    Not,
    Obl,
    Or,
    Perm,
    print_formula,
)

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "deontic_co" / "fixtures"
HILBERT_FIXTURES = sorted((FIXTURES / "hilbert").glob("*.proof"))
ND_FIXTURES = sorted((FIXTURES / "nd").glob("*.nd"))

p, q, r = Atom("p"), Atom("q"), Atom("r")
ATOMS = [p, q, r, Atom("s1")]
CONSTANTS = [TOP, BOT, BOT_W]


# -- hypothesis ----------------------------------------------------------------


def formulas(max_leaves: int = 40):
    """Arbitrary formulas, every constructor and label included."""
    leaves = st.sampled_from(ATOMS + CONSTANTS)

    def extend(sub):
        return st.one_of(
            st.builds(Not, sub),
            st.builds(And, sub, sub),
            st.builds(Or, sub, sub),
            st.builds(Imp, sub, sub),
            st.builds(Labeled, sub, st.sampled_from(list(Label))),
            st.builds(Obl, sub, sub),
            st.builds(Perm, sub, sub),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


def deontic_formulas(atoms=(p, q), max_leaves: int = 12):
    """Closed CO formulas: Boolean combinations of O/P over Boolean arguments."""
    boolean = st.recursive(
        st.sampled_from(list(atoms) + [TOP, BOT]),
        lambda s: st.one_of(st.builds(Not, s), st.builds(And, s, s), st.builds(Or, s, s), st.builds(Imp, s, s)),
        max_leaves=4,
    )
    deontic = st.one_of(st.builds(Obl, boolean, boolean), st.builds(Perm, boolean, boolean))
    return st.recursive(
        deontic,
        lambda s: st.one_of(st.builds(Not, s), st.builds(And, s, s), st.builds(Or, s, s), st.builds(Imp, s, s)),
        max_leaves=max_leaves,
    )


# -- seeded generators (for counts fixed in acceptance criteria) ----------------

_BINARY = (And, Or, Imp, Obl, Perm)


def random_formula(rng: random.Random, depth: int) -> object:
    if depth == 0 or rng.random() < 0.2:
        return rng.choice(ATOMS + CONSTANTS)
    k = rng.random()
    if k < 0.2:
        return Not(random_formula(rng, depth - 1))
    if k < 0.4:
        return Labeled(random_formula(rng, depth - 1), rng.choice(list(Label)))
    cls = rng.choice(_BINARY)
    return cls(random_formula(rng, depth - 1), random_formula(rng, depth - 1))


def opaque_leaves():
    """Non-Boolean leaves for skeletons; some share structure to exercise keying."""
    return [
        p, q, r, Atom("s1"),
        Obl(p, q), Obl(q, p), Perm(p, q), Obl(And(p, q), r),
        Labeled(p, Label.SOME_WORLD), Labeled(p, Label.ALL_WORLDS),
        Labeled(Obl(p, q), Label.SOME_SPHERE), Not(Obl(p, q)),
    ]


def random_skeleton(rng: random.Random, depth: int):
    """Boolean skeleton over opaque leaves and constants."""
    if depth == 0 or rng.random() < 0.25:
        return rng.choice(opaque_leaves() + CONSTANTS)
    k = rng.random()
    if k < 0.25:
        return Not(random_skeleton(rng, depth - 1))
    cls = rng.choice((And, Or, Imp))
    return cls(random_skeleton(rng, depth - 1), random_skeleton(rng, depth - 1))


def constructed_tautology(rng: random.Random):
    """A tautology built from a classical scheme instantiated with skeletons."""
    x, y, z = (random_skeleton(rng, 2) for _ in range(3))
    schemes = [
        lambda: Or(x, Not(x)),
        lambda: Imp(x, Imp(y, x)),
        lambda: Imp(Imp(x, Imp(y, z)), Imp(Imp(x, y), Imp(x, z))),
        lambda: Imp(And(x, y), Or(y, z)),
        lambda: Imp(Not(Not(x)), x),
        lambda: Imp(BOT, x),
        lambda: Or(TOP, x),
    ]
    return rng.choice(schemes)()


def truth_table_oracle(f) -> bool:
    """Tautology by explicit enumeration of assignments to opaque parts."""
    leaves: dict[str, object] = {}

    def collect(g):
        if g in CONSTANTS:
            return
        if isinstance(g, Not):
            collect(g.body)
        elif isinstance(g, (And, Or, Imp)):
            collect(g.left)
            collect(g.right)
        else:
            leaves.setdefault(print_formula(g), g)

    def value(g, env):
        if g == TOP:
            return True
        if g in (BOT, BOT_W):
            return False
        if isinstance(g, Not):
            return not value(g.body, env)
        if isinstance(g, And):
            return value(g.left, env) and value(g.right, env)
        if isinstance(g, Or):
            return value(g.left, env) or value(g.right, env)
        if isinstance(g, Imp):
            return (not value(g.left, env)) or value(g.right, env)
        return env[print_formula(g)]

    collect(f)
    keys = list(leaves)
    return all(
        value(f, dict(zip(keys, bits))) for bits in itertools.product((False, True), repeat=len(keys))
    )


# -- deontic pool --------------------------------------------------------------

DEONTIC_POOL = [
    Obl(p, q),
    Obl(q, p),
    Perm(p, q),
    Perm(Not(p), q),
    Obl(p, TOP),
    Obl(TOP, p),
    Obl(p, BOT),
    Perm(BOT, q),
    Obl(And(p, q), Or(p, q)),
    Obl(Or(p, Not(q)), p),
    Perm(Imp(p, q), Not(p)),
    Not(Obl(p, q)),
    And(Obl(p, q), Perm(Not(p), q)),
    Or(Obl(p, q), Obl(q, Not(p))),
    Imp(Obl(p, Or(p, q)), Obl(p, p)),
    Imp(And(Obl(p, q), Obl(q, q)), Obl(And(p, q), q)),
    Obl(Obl(p, q), p),
    Perm(Obl(q, p), Perm(p, q)),
    Obl(p, And(q, Not(q))),
    Imp(Perm(p, q), Not(Obl(Not(p), q))),
]


# -- Hilbert mutation suite ------------------------------------------------------


def justification_mutants(pf: HilbertProof):
    """Single-token edits of justifications: an index, an axiom id, a bound atom or the congruence side."""
    axioms = [f"A{i}" for i in range(1, 9)]
    for i, line in enumerate(pf.lines):
        j = line.justification
        alts = []
        if isinstance(j, MP):
            alts += [MP(j.major, j.minor), MP(j.minor, j.major + 1), MP(j.minor + 1, j.major)]
            if j.minor > 1:
                alts.append(MP(j.minor - 1, j.major))
        elif isinstance(j, AxiomRef):
            nxt = axioms[(axioms.index(j.axiom) + 1) % len(axioms)]
            alts.append(AxiomRef(nxt, j.bindings))
            for k, v in sorted(j.bindings.items()):
                other = q if v != q else p
                alts.append(AxiomRef(j.axiom, {**j.bindings, k: other}))
        elif isinstance(j, CongBody):
            alts += [CongCondition(j.premise), CongBody(j.premise + 1)]
        elif isinstance(j, CongCondition):
            alts += [CongBody(j.premise), CongCondition(j.premise + 1)]
        for alt in alts:
            lines = list(pf.lines)
            lines[i] = Line(line.formula, alt)
            yield i + 1, HilbertProof(lines)


def load_hilbert_fixtures():
    return {path.stem: parse_proof(path.read_text()) for path in HILBERT_FIXTURES}
