from __future__ import annotations

import random
from dataclasses import replace

import pytest

from deontic_co.nd import checker
from deontic_co.nd.build import (
    and_i,
    bullet_wit,
    circ_e,
    circ_i,
    hyp,
    imp_i,
    premise,
    star_e,
    star_i,
    top_i,
    weaken,
)
from deontic_co.nd.checker import DISCHARGE_SCOPE, DerivationError, Reason, check_derivation, open_hypotheses
from deontic_co.nd.derivation import (
    WITNESS,
    Hyp,
    HypInc,
    Node,
    Sphere,
    World,
    at,
    format_derivation,
    parse_derivation,
    replace_at,
    subtrees,
)
from deontic_co.nd.templates import (
    TEMPLATE_IDS,
    MissingAux,
    T,
    check_all_axiom_templates,
    expected_root,
    fixture_derivation,
    generate_template,
)
from deontic_co.nd.transfer import NameCollision, NotClosed, rename_apart, transfer
from deontic_co.semantics import check_validity
from deontic_co.sexpr import ParseError
from deontic_co.syntax import TOP, And, Imp, Label, Labeled, Obl, Or, iff, lab, translate_deontic

from helpers import ND_FIXTURES, p, q, r

N, M, U = Sphere("N"), Sphere("M"), World("u")
FIXTURE_TREES = {path.stem: parse_derivation(path.read_text()) for path in ND_FIXTURES}


def reject(d, reason, path=None):
    with pytest.raises(DerivationError) as info:
        check_derivation(d)
    assert info.value.reason is reason, str(info.value)
    if path is not None:
        assert info.value.path == tuple(path)
    return info.value


# -- templates -----------------------------------------------------------------


@pytest.mark.parametrize("tid", ["A2L", "A2R"])
def test_aggregation_templates_check(tid):
    d = generate_template(tid, p, q, r)
    assert check_derivation(d).conclusion.formula == expected_root(tid, p, q, r)


def test_a4_root():
    d = generate_template("A4", p, p, q)
    assert d.formula == Imp(T(q, TOP), T(q, q))
    check_derivation(d)


def test_a6_root():
    d = generate_template("A6", p, q, r)
    assert d.formula == translate_deontic(Imp(And(Obl(p, q), Obl(p, r)), Obl(p, Or(q, r))))
    assert d.formula.right == T(Or(q, r), p)
    check_derivation(d)


def test_r3_with_schematic_aux():
    psi = premise(iff(p, q), N, U)
    d = generate_template("R3", p, q, r, aux=psi)
    done = check_derivation(d)
    assert done.conclusion.formula == translate_deontic(Imp(Obl(p, r), Obl(q, r)))
    assert [j.formula for j in done.premises] == [iff(p, q)]


def test_r4_with_schematic_aux():
    psi = premise(iff(q, r), N, U)
    done = check_derivation(generate_template("R4", p, q, r, aux=psi))
    assert done.conclusion.formula == translate_deontic(Imp(Obl(p, r), Obl(p, q)))


def test_missing_or_wrong_aux():
    with pytest.raises(MissingAux):
        generate_template("R3", p, q, r)
    with pytest.raises(ValueError):
        generate_template("R4", p, q, r, aux=premise(iff(q, r)))
    with pytest.raises(ValueError):
        generate_template("A9", p, q, r)


def test_a5_root_single_atom():
    report = check_all_axiom_templates([p], ids=["A5"])
    assert report.passed and report.results["A5"].ok == 1
    d = generate_template("A5", p, p, p)
    assert d.formula == Imp(T(p, TOP), T(Or(p, p), TOP))


def test_all_templates_over_pool():
    report = check_all_axiom_templates([p, q, r])
    assert report.passed, report.render()
    assert all(res.checked == 27 for res in report.results.values())
    assert report.render().splitlines()[0] == "id\tok\tchecked"


@pytest.mark.parametrize("tid", TEMPLATE_IDS)
def test_template_roots_valid(tid):
    d = FIXTURE_TREES[tid.lower()]
    assert check_validity(check_derivation(d).conclusion.formula, atoms=["p", "q", "r"], max_worlds=2) is None


@pytest.mark.parametrize("tid", TEMPLATE_IDS)
def test_fixtures_regenerate(tid):
    path = next(p for p in ND_FIXTURES if p.stem == tid.lower())
    assert path.read_text() == format_derivation(fixture_derivation(tid)) + "\n"


@pytest.mark.parametrize("name", sorted(FIXTURE_TREES))
def test_corrupted_context_tag_is_caught(name):
    d = FIXTURE_TREES[name]
    rng = random.Random(name)
    sites = [(path, t) for path, t in subtrees(d) if any(isinstance(it, Sphere) for it in t.context)]
    for path, t in rng.sample(sites, min(8, len(sites))):
        ctx = tuple(M if it == N else N if it == M else it for it in t.context)
        if not any(it == M for it in t.context):
            ctx = tuple(Sphere("K") if it == N else it for it in ctx)
        with pytest.raises(DerivationError):
            check_derivation(replace_at(d, path, replace(t, context=ctx)))


def test_flipping_inclusion_reading_breaks_nesting(monkeypatch):
    monkeypatch.setattr(checker, "INCLUSION_MEANS_SUBSET", False)
    reject(FIXTURE_TREES["a2r"], Reason.BAD_CONTEXT)


# -- checker -------------------------------------------------------------------


def test_star_intro_freshness():
    inner = imp_i(hyp(2, p, N, U), p, 1)
    reject(Node("star-i", (N,), Labeled(inner.formula, Label.ALL_WORLDS), (inner,)), Reason.FRESHNESS_VIOLATION, ())


def test_circ_intro_needs_sphere():
    reject(Node("circ-i", (), Labeled(TOP, Label.SOME_SPHERE), (top_i(),)), Reason.BAD_CONTEXT, ())


def test_unknown_rule_and_arity():
    reject(Node("cut", (), TOP), Reason.UNKNOWN_RULE)
    reject(Node("and-i", (), And(TOP, TOP), (top_i(),)), Reason.RULE_SHAPE_MISMATCH)
    reject(Node("top-i", (), TOP, (), 3), Reason.RULE_SHAPE_MISMATCH)


def test_undischarged_hypothesis():
    err = reject(imp_i(hyp(2, p), p, 1), Reason.UNDISCHARGED_HYPOTHESIS)
    assert err.path == (0,)


def test_discharged_hypothesis_must_match():
    reject(imp_i(hyp(1, q), p, 1), Reason.RULE_SHAPE_MISMATCH)


def test_first_failure_in_preorder():
    bad = Node("and-e", (), p, (top_i(),))
    d = Node("and-i", (), And(p, p), (bad, bad))
    assert reject(d, Reason.RULE_SHAPE_MISMATCH).path == (0,)


def test_malformed_contexts():
    reject(top_i(U), Reason.BAD_CONTEXT)
    reject(top_i(N, WITNESS, U), Reason.BAD_CONTEXT)
    reject(Node("star-i", (N,), Labeled(TOP, Label.ALL_WORLDS), (top_i(N, M, U),)), Reason.BAD_CONTEXT)


def test_witness_discipline():
    x = premise(Labeled(p, Label.SOME_WORLD), N)
    y = premise(Labeled(q, Label.SOME_WORLD), N)
    reject(and_i(bullet_wit(x), bullet_wit(y)), Reason.BAD_CONTEXT)
    reject(Node("bullet-wit", (N, WITNESS, U), p, (x,)), Reason.BAD_CONTEXT)


def test_weaken_respects_dependencies():
    at_world = premise(p, N, U)
    reject(weaken(premise(p, N), U), Reason.BAD_CONTEXT)
    reject(weaken(premise(Labeled(p, Label.ALL_WORLDS), N), M), Reason.BAD_CONTEXT)
    check_derivation(weaken(at_world, M))


def test_circ_elim_freshness():
    x = lab(p, Label.SOME_SPHERE)
    check_derivation(circ_e(premise(x), circ_i(hyp(1, p, N)), 1))
    # M is bound by the conclusion's context, so it cannot serve as the eigen-sphere
    inner = circ_e(premise(x, M), circ_i(hyp(1, p, M, M)), 1)
    reject(inner, Reason.FRESHNESS_VIOLATION)


def test_star_elim_needs_sphere():
    reject(star_e(premise(Labeled(p, Label.ALL_WORLDS)), U), Reason.BAD_CONTEXT)
    x = premise(Labeled(p, Label.ALL_WORLDS), N)
    check_derivation(star_i(star_e(x, U)))


# -- discharge bookkeeping -------------------------------------------------------


def brute_force_open(d):
    found = []
    for path, leaf in subtrees(d):
        if not isinstance(leaf, (Hyp, HypInc)):
            continue
        closed = False
        for depth in range(len(path)):
            anc = at(d, path[:depth])
            if anc.discharge == leaf.index and path[depth] in DISCHARGE_SCOPE.get(anc.rule, ()):
                closed = True
                break
        if not closed:
            found.append((path, leaf))
    return found


@pytest.mark.parametrize("name", sorted(FIXTURE_TREES))
def test_open_hypotheses_match_oracle(name):
    d = FIXTURE_TREES[name]
    for path, t in subtrees(d):
        expected = [(path + lp, leaf) for lp, leaf in brute_force_open(t)]
        assert [(path + lp, leaf) for lp, leaf in open_hypotheses(t)] == expected
    assert open_hypotheses(d) == []


# -- files and transfer --------------------------------------------------------


def test_derivation_text_round_trip():
    for name, d in FIXTURE_TREES.items():
        assert parse_derivation(format_derivation(d)) == d


@pytest.mark.parametrize(
    "text",
    [
        "(node top-i (ctx) topn (discharge))",
        "(node imp-i (ctx N 3) topn)",
        "(hyp x p (ctx))",
        "(hyp-inc 1 u (ctx N))",
        "(leaf p)",
        "(node top-i ctx topn)",
    ],
)
def test_derivation_parse_errors(text):
    with pytest.raises(ParseError):
        parse_derivation(text)


def identity_proof():
    return imp_i(hyp(1, p), p, 1)


def test_transfer_identity():
    moved = transfer(identity_proof())
    assert moved.formula == Imp(p, p) and moved.context == (N, U)
    assert check_derivation(moved).conclusion.context == (N, U)


def test_transfer_errors():
    with pytest.raises(NameCollision):
        transfer(FIXTURE_TREES["a3"])
    with pytest.raises(NotClosed):
        transfer(hyp(1, p))
    with pytest.raises(NotClosed):
        transfer(premise(p))


@pytest.mark.parametrize("name", sorted(FIXTURE_TREES))
def test_transfer_fixtures(name):
    d = rename_apart(FIXTURE_TREES[name])
    check_derivation(d)
    moved = transfer(d)
    done = check_derivation(moved)
    assert done.conclusion == replace(done.conclusion, formula=d.formula, context=(N, U))
    for (pa, a), (pb, b) in zip(subtrees(d), subtrees(moved)):
        assert pa == pb and len(b.context) == len(a.context) + 2


def test_rename_apart_is_injective():
    d = FIXTURE_TREES["a2r"]
    renamed = rename_apart(d, avoid=("N", "M"))
    names = {it.name for _, t in subtrees(renamed) for it in t.context if hasattr(it, "name")}
    assert "N" not in names and "M" not in names and len(names) == 3


# -- soundness spot check ------------------------------------------------------


def test_mutants_that_check_are_valid():
    rng = random.Random(3)
    items = [N, M, U, World("v"), WITNESS]
    accepted = 0
    for name, d in sorted(FIXTURE_TREES.items()):
        nodes = list(subtrees(d))
        for _ in range(150):
            path, t = rng.choice(nodes)
            if isinstance(t, HypInc) or not t.context:
                continue
            ctx = list(t.context)
            ctx[rng.randrange(len(ctx))] = rng.choice(items)
            m = replace_at(d, path, replace(t, context=tuple(ctx)))
            try:
                done = check_derivation(m)
            except DerivationError:
                continue
            accepted += 1
            if not done.premises and not done.conclusion.context:
                assert check_validity(done.conclusion.formula, atoms=["p", "q", "r"], max_worlds=2) is None
    assert accepted < 150 * len(FIXTURE_TREES)
