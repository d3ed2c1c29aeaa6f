"""``deontic-co`` command line.

Exit status: 0 when the check succeeds (true, valid, ok), 1 when it fails
(false, countermodel, rejected proof), 2 on unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import hilbert
from .nd import checker as nd_checker
from .nd import derivation as nd_derivation
from .nd import templates
from .semantics import (
    DEFAULT_ATOMS,
    DEFAULT_MAX_WORLDS,
    axiom_validity_suite,
    check_validity,
    evaluate,
    format_model,
    parse_model,
)
from .sexpr import ParseError
from .syntax import atoms, parse_formula, print_formula, translate_deontic

OK, FAILED, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _atoms(arg: str | None, *formulas) -> tuple[str, ...]:
    if arg:
        return tuple(a.strip() for a in arg.split(",") if a.strip())
    needed = set().union(*(atoms(f) for f in formulas)) if formulas else set()
    return tuple(DEFAULT_ATOMS) + tuple(sorted(needed - set(DEFAULT_ATOMS)))


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text if text.endswith("\n") else text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)


def cmd_eval(args) -> int:
    model = parse_model(_read(args.model))
    value = evaluate(model, parse_formula(args.formula))
    _emit(args, "true" if value else "false")
    return OK if value else FAILED


def cmd_validity(args) -> int:
    f = parse_formula(args.formula)
    cm = check_validity(f, atoms=_atoms(args.atoms, f), max_worlds=args.max_worlds)
    if cm is None:
        _emit(args, f"valid (bounds: {args.max_worlds} worlds)")
        return OK
    _emit(args, format_model(cm))
    return FAILED


def cmd_translate(args) -> int:
    _emit(args, print_formula(translate_deontic(parse_formula(args.formula))))
    return OK


def cmd_check_hilbert(args) -> int:
    pf = hilbert.parse_proof(_read(args.proof))
    try:
        theorem = hilbert.check_proof(pf)
    except hilbert.ProofError as exc:
        _emit(args, f"error (line {exc.line}) {exc.reason.value}" + (f": {exc.detail}" if exc.detail else ""))
        return FAILED
    _emit(args, f"ok {print_formula(theorem)}")
    return OK


def cmd_check_nd(args) -> int:
    d = nd_derivation.parse_derivation(_read(args.derivation))
    try:
        done = nd_checker.check_derivation(d)
    except nd_checker.DerivationError as exc:
        where = " ".join(map(str, exc.path))
        _emit(args, f"error (path {where}) {exc.reason.value}" + (f": {exc.detail}" if exc.detail else ""))
        return FAILED
    j = done.conclusion
    _emit(args, f"ok {print_formula(j.formula)} {nd_derivation.format_context(j.context)}")
    return OK


def cmd_gen_template(args) -> int:
    a, b, c = (parse_formula(x) for x in (args.a, args.b, args.c))
    aux = None
    if args.aux:
        aux = nd_derivation.parse_derivation(_read(args.aux))
    elif args.id in ("R3", "R4"):
        aux = templates.default_aux(args.id, a, b, c)
    try:
        d = templates.generate_template(args.id, a, b, c, aux=aux)
    except templates.MissingAux as exc:
        raise InputError(f"{exc}; pass --aux") from None
    _emit(args, nd_derivation.format_derivation(d))
    return OK


def cmd_axiom_suite(args) -> int:
    report = axiom_validity_suite(max_worlds=args.max_worlds, atoms=_atoms(args.atoms))
    _emit(args, report.render())
    return OK if report.passed else FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="deontic-co", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--out", help="write the report to this file")
        p.set_defaults(fn=fn)
        return p

    def bounds(p):
        p.add_argument("--atoms", help=f"comma-separated atoms (default {','.join(DEFAULT_ATOMS)})")
        p.add_argument("--max-worlds", type=int, default=DEFAULT_MAX_WORLDS)

    p = command("eval", cmd_eval, "evaluate a formula in a model file")
    p.add_argument("model")
    p.add_argument("formula")

    p = command("validity", cmd_validity, "bounded validity check")
    p.add_argument("formula")
    bounds(p)

    p = command("translate", cmd_translate, "rewrite O/P into label form")
    p.add_argument("formula")

    p = command("check-hilbert", cmd_check_hilbert, "check a Hilbert proof file")
    p.add_argument("proof")

    p = command("check-nd", cmd_check_nd, "check a natural-deduction derivation file")
    p.add_argument("derivation")

    p = command("gen-template", cmd_gen_template, "emit a template derivation")
    p.add_argument("id", choices=templates.TEMPLATE_IDS)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p.add_argument("--aux", help="derivation file for the R3/R4 equivalence at (ctx N u)")

    p = command("axiom-suite", cmd_axiom_suite, "bounded validity of every axiom instance")
    bounds(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except (InputError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
    return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
