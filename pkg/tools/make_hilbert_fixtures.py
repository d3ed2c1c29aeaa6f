"""Write the Hilbert proof fixtures. Run from the repository root."""
from __future__ import annotations

from pathlib import Path

from deontic_co.hilbert import MP, CongBody, CongCondition, HilbertProof, Line, Taut, check_proof, format_proof, instance
from deontic_co.syntax import And, Atom, Imp, Not, Obl, Or, Perm, TOP, iff

OUT = Path(__file__).resolve().parents[1] / "src" / "deontic_co" / "fixtures" / "hilbert"
p, q, r = Atom("p"), Atom("q"), Atom("r")


def a3_mp():
    l1 = instance("A3", A=p, C=q)
    return [l1, Line(Imp(l1.formula, l1.formula), Taut()), Line(l1.formula, MP(1, 2))]


def a3_a1_chain():
    o, pm, no = Obl(p, q), Perm(p, q), Not(Obl(Not(p), q))
    a1 = instance("A1", A=p, C=q)
    return [
        instance("A3", A=p, C=q),
        a1,
        Line(Imp(a1.formula, Imp(pm, no)), Taut()),
        Line(Imp(pm, no), MP(2, 3)),
        Line(Imp(Imp(o, pm), Imp(Imp(pm, no), Imp(o, no))), Taut()),
        Line(Imp(Imp(pm, no), Imp(o, no)), MP(1, 5)),
        Line(Imp(o, no), MP(4, 6)),
    ]


def cong_body():
    nnp = Not(Not(p))
    return [
        Line(iff(p, nnp), Taut()),
        Line(iff(Obl(p, q), Obl(nnp, q)), CongBody(1)),
    ]


def cong_cond():
    qr, rq = Or(q, r), Or(r, q)
    return [
        Line(iff(qr, rq), Taut()),
        Line(iff(Obl(p, qr), Obl(p, rq)), CongCondition(1)),
    ]


def a2_split():
    lhs, both = Obl(And(p, q), r), And(Obl(p, r), Obl(q, r))
    a2 = instance("A2", A=p, B=q, C=r)
    return [
        a2,
        Line(Imp(a2.formula, Imp(lhs, both)), Taut()),
        Line(Imp(lhs, both), MP(1, 2)),
        Line(Imp(Imp(lhs, both), Imp(lhs, Obl(p, r))), Taut()),
        Line(Imp(lhs, Obl(p, r)), MP(3, 4)),
    ]


def a6_disjunction():
    """O(p/q) ∧ O(p/r) → O(p/r∨q) from A6 and R4 on q∨r ≡ r∨q."""
    qr, rq = Or(q, r), Or(r, q)
    a6 = instance("A6", A=p, B=q, C=r)
    prem = And(Obl(p, q), Obl(p, r))
    return [
        a6,
        Line(iff(qr, rq), Taut()),
        Line(iff(Obl(p, qr), Obl(p, rq)), CongCondition(2)),
        Line(Imp(iff(Obl(p, qr), Obl(p, rq)), Imp(Obl(p, qr), Obl(p, rq))), Taut()),
        Line(Imp(Obl(p, qr), Obl(p, rq)), MP(3, 4)),
        Line(Imp(Imp(prem, Obl(p, qr)), Imp(Imp(Obl(p, qr), Obl(p, rq)), Imp(prem, Obl(p, rq)))), Taut()),
        Line(Imp(Imp(Obl(p, qr), Obl(p, rq)), Imp(prem, Obl(p, rq))), MP(1, 6)),
        Line(Imp(prem, Obl(p, rq)), MP(5, 7)),
    ]


def a4_a5_a7_a8():
    """Instances of A4, A5, A7 and A8 conjoined into one theorem."""
    lines = [
        instance("A4", C=q),
        instance("A5", B=p, C=q),
        instance("A7", A=p, B=q, C=r),
        instance("A8", A=p, B=q, C=r),
    ]
    acc, n = lines[0].formula, 1
    for i in (2, 3, 4):
        nxt = lines[i - 1].formula
        conj = And(acc, nxt)
        lines.append(Line(Imp(acc, Imp(nxt, conj)), Taut()))
        k = len(lines)
        lines.append(Line(Imp(nxt, conj), MP(n, k)))
        lines.append(Line(conj, MP(i, k + 1)))
        acc, n = conj, len(lines)
    return lines


def permission_from_obligation():
    """O(p∧q/r) → P(p/r), chaining the A2 split with A3."""
    lhs = Obl(And(p, q), r)
    x = a2_split()
    a3 = instance("A3", A=p, C=r)
    x.append(a3)
    x.append(Line(Imp(Imp(lhs, Obl(p, r)), Imp(a3.formula, Imp(lhs, Perm(p, r)))), Taut()))
    x.append(Line(Imp(a3.formula, Imp(lhs, Perm(p, r))), MP(5, 7)))
    x.append(Line(Imp(lhs, Perm(p, r)), MP(6, 8)))
    return x


def top_obligation():
    a4 = instance("A4", C=TOP)
    return [a4, Line(Imp(a4.formula, a4.formula), Taut()), Line(a4.formula, MP(1, 2))]


FIXTURES = {
    "a3_mp": a3_mp,
    "a3_a1_chain": a3_a1_chain,
    "cong_body": cong_body,
    "cong_cond": cong_cond,
    "a2_split": a2_split,
    "a6_disjunction": a6_disjunction,
    "a4_a5_a7_a8": a4_a5_a7_a8,
    "a2_a3_permission": permission_from_obligation,
    "a4_top": top_obligation,
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name, make in FIXTURES.items():
        pf = HilbertProof(make())
        check_proof(pf)
        (OUT / f"{name}.proof").write_text(format_proof(pf))
        print(name, len(pf))


if __name__ == "__main__":
    main()
