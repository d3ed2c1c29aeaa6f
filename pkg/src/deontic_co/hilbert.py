"""Line-by-line checker for Hilbert-style proofs in the CO system.

Rules: tautologies, modus ponens, the congruence rules for the body and the
condition of an obligation, and the axiom schemas in :mod:`.schemas`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from . import schemas
from .sexpr import ParseError, SList, Symbol, read_all
from .syntax import (
    And,
    BotN,
    BotW,
    Formula,
    Imp,
    Not,
    Obl,
    Or,
    TopN,
    from_sexpr,
    print_formula,
    split_iff,
    substitute,
)


class Reason(enum.Enum):
    NOT_TAUTOLOGY = "NotTautology"
    BAD_MP_SHAPE = "BadMPShape"
    SCHEMA_MISMATCH = "SchemaMismatch"
    BAD_CONGRUENCE = "BadCongruence"
    FORWARD_REFERENCE = "ForwardReference"


class ProofError(Exception):
    def __init__(self, line: int, reason: Reason, detail: str = ""):
        self.line = line
        self.reason = reason
        self.detail = detail
        super().__init__(f"line {line}: {reason.value}" + (f" ({detail})" if detail else ""))


@dataclass(frozen=True)
class Taut:
    pass


@dataclass(frozen=True)
class MP:
    minor: int
    major: int


@dataclass(frozen=True)
class AxiomRef:
    axiom: str
    bindings: Mapping[str, Formula] = field(default_factory=dict)


@dataclass(frozen=True)
class CongBody:
    premise: int


@dataclass(frozen=True)
class CongCondition:
    premise: int


Justification = Taut | MP | AxiomRef | CongBody | CongCondition


@dataclass(frozen=True)
class Line:
    formula: Formula
    justification: Justification


@dataclass
class HilbertProof:
    lines: list[Line]

    def __len__(self):
        return len(self.lines)


# -- tautologies ---------------------------------------------------------------


def opaque_parts(f: Formula) -> dict[str, Formula]:
    """Maximal non-Boolean subformulas, keyed by canonical text."""
    out: dict[str, Formula] = {}

    def walk(g: Formula):
        if isinstance(g, (TopN, BotN, BotW)):
            return
        if isinstance(g, Not):
            walk(g.body)
        elif isinstance(g, (And, Or, Imp)):
            walk(g.left)
            walk(g.right)
        else:
            out.setdefault(print_formula(g), g)

    walk(f)
    return out


def is_tautology(f: Formula) -> bool:
    """Classical tautology check with O, P, labeled formulas and atoms opaque.

    All 2^k assignments are evaluated at once: each opaque part is an integer
    whose bit t holds its value under assignment t.
    """
    keys = sorted(opaque_parts(f))
    k = len(keys)
    width = 1 << k
    full = (1 << width) - 1
    columns = {}
    for i, key in enumerate(keys):
        block = 1 << i
        unit = ((1 << block) - 1) << block
        columns[key] = unit * (full // ((1 << (2 * block)) - 1))
    return _bits(f, columns, full) == full


def _bits(f: Formula, columns: dict[str, int], full: int) -> int:
    if isinstance(f, TopN):
        return full
    if isinstance(f, (BotN, BotW)):
        return 0
    if isinstance(f, Not):
        return full ^ _bits(f.body, columns, full)
    if isinstance(f, And):
        return _bits(f.left, columns, full) & _bits(f.right, columns, full)
    if isinstance(f, Or):
        return _bits(f.left, columns, full) | _bits(f.right, columns, full)
    if isinstance(f, Imp):
        return (full ^ _bits(f.left, columns, full)) | _bits(f.right, columns, full)
    return columns[print_formula(f)]


# -- axioms --------------------------------------------------------------------


def match_axiom(axiom: str, f: Formula) -> dict[str, Formula] | None:
    """Bindings of A, B, C that turn the schema into ``f``, or None."""
    schema = schemas.AXIOMS.get(axiom)
    if schema is None:
        raise ValueError(f"unknown axiom {axiom!r}")
    return schemas.match(schema, f)


# -- checking ------------------------------------------------------------------


def check_proof(pf: HilbertProof | Sequence[Line]) -> Formula:
    """Validate every line; return the theorem on the last line.

    Raises :class:`ProofError` at the first bad line (1-based).
    """
    lines = pf.lines if isinstance(pf, HilbertProof) else list(pf)
    if not lines:
        raise ValueError("empty proof")
    for n, line in enumerate(lines, start=1):
        _check_line(lines, n, line)
    return lines[-1].formula


def _cited(lines, n: int, i: int) -> Formula:
    if not 1 <= i < n:
        raise ProofError(n, Reason.FORWARD_REFERENCE, f"line {i} is not an earlier line")
    return lines[i - 1].formula


def _check_line(lines, n: int, line: Line) -> None:
    f, j = line.formula, line.justification
    if isinstance(j, Taut):
        if not is_tautology(f):
            raise ProofError(n, Reason.NOT_TAUTOLOGY)
    elif isinstance(j, MP):
        minor = _cited(lines, n, j.minor)
        major = _cited(lines, n, j.major)
        if major != Imp(minor, f):
            raise ProofError(n, Reason.BAD_MP_SHAPE, f"line {j.major} is not line {j.minor} → this line")
    elif isinstance(j, AxiomRef):
        schema = schemas.AXIOMS.get(j.axiom)
        if schema is None:
            raise ProofError(n, Reason.SCHEMA_MISMATCH, f"unknown axiom {j.axiom}")
        if j.bindings:
            if set(j.bindings) != set(schemas.metavariables(schema)):
                raise ProofError(n, Reason.SCHEMA_MISMATCH, "bindings do not cover exactly the schema's metavariables")
            if substitute(schema, j.bindings) != f:
                raise ProofError(n, Reason.SCHEMA_MISMATCH, "instance differs from the line")
        elif schemas.match(schema, f) is None:
            raise ProofError(n, Reason.SCHEMA_MISMATCH, f"not an instance of {j.axiom}")
    elif isinstance(j, (CongBody, CongCondition)):
        premise = split_iff(_cited(lines, n, j.premise))
        concl = split_iff(f)
        if premise is None or concl is None:
            raise ProofError(n, Reason.BAD_CONGRUENCE, "premise and conclusion must both be equivalences")
        x, y = premise
        lhs, rhs = concl
        if not (isinstance(lhs, Obl) and isinstance(rhs, Obl)):
            raise ProofError(n, Reason.BAD_CONGRUENCE, "conclusion must relate two obligations")
        if isinstance(j, CongBody):
            ok = lhs.body == x and rhs.body == y and lhs.condition == rhs.condition
        else:
            ok = lhs.condition == x and rhs.condition == y and lhs.body == rhs.body
        if not ok:
            raise ProofError(n, Reason.BAD_CONGRUENCE)
    else:
        raise TypeError(f"unknown justification {j!r}")


# -- proof files ---------------------------------------------------------------


def parse_proof(text: str) -> HilbertProof:
    forms = read_all(text)
    if len(forms) == 1 and isinstance(forms[0], SList) and forms[0].head() == "proof":
        forms = list(forms[0].items[1:])
    lines = []
    for e in forms:
        if not isinstance(e, SList) or e.head() != "line" or len(e.items) != 3:
            raise ParseError(e.offset, "(line <formula> <justification>)")
        lines.append(Line(from_sexpr(e.items[1]), _justification(e.items[2])))
    if not lines:
        raise ParseError(0, "at least one (line ...)")
    return HilbertProof(lines)


def _index(e) -> int:
    if not isinstance(e, Symbol) or not e.text.isdigit():
        raise ParseError(e.offset, "a line number", getattr(e, "text", "("))
    return int(e.text)


def _justification(e) -> Justification:
    if not isinstance(e, SList) or not e.items:
        raise ParseError(e.offset, "a justification")
    head, args = e.head(), e.items[1:]
    if head == "taut" and not args:
        return Taut()
    if head == "mp" and len(args) == 2:
        return MP(_index(args[0]), _index(args[1]))
    if head in ("cong-body", "cong-cond") and len(args) == 1:
        cls = CongBody if head == "cong-body" else CongCondition
        return cls(_index(args[0]))
    if head == "axiom" and args and isinstance(args[0], Symbol):
        bindings = {}
        for b in args[1:]:
            if (
                not isinstance(b, SList)
                or len(b.items) != 2
                or not isinstance(b.items[0], Symbol)
                or b.items[0].text not in schemas.METAVARIABLES
            ):
                raise ParseError(b.offset, "a binding (A|B|C <formula>)")
            bindings[b.items[0].text] = from_sexpr(b.items[1])
        return AxiomRef(args[0].text, bindings)
    raise ParseError(e.offset, "(taut), (mp i j), (axiom An ...), (cong-body i) or (cong-cond i)")


def format_justification(j: Justification) -> str:
    if isinstance(j, Taut):
        return "(taut)"
    if isinstance(j, MP):
        return f"(mp {j.minor} {j.major})"
    if isinstance(j, CongBody):
        return f"(cong-body {j.premise})"
    if isinstance(j, CongCondition):
        return f"(cong-cond {j.premise})"
    binds = "".join(f" ({k} {print_formula(v)})" for k, v in sorted(j.bindings.items()))
    return f"(axiom {j.axiom}{binds})"


def format_proof(pf: HilbertProof) -> str:
    body = "\n".join(
        f"  (line {print_formula(l.formula)} {format_justification(l.justification)})" for l in pf.lines
    )
    return f"(proof\n{body})\n"


def instance(axiom: str, **bindings: Formula) -> Line:
    """A line stating the given instance of an axiom, justified by it."""
    return Line(substitute(schemas.AXIOMS[axiom], bindings), AxiomRef(axiom, dict(bindings)))

