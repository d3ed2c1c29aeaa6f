from __future__ import annotations

import subprocess
import sys

import pytest

from deontic_co.cli import main
from deontic_co.nd.derivation import format_derivation
from deontic_co.nd.build import hyp, imp_i, premise
from deontic_co.nd.templates import and_commutation
from deontic_co.nd.transfer import transfer
from deontic_co.semantics import parse_model
from deontic_co.syntax import And, iff

from helpers import HILBERT_FIXTURES, ND_FIXTURES, p, q

MODEL = "(model (worlds 2) (spheres (s 0) (s 0 1)) (val p 0) (val q 0 1) (designated 1))"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.fixture
def model_file(tmp_path):
    path = tmp_path / "m.model"
    path.write_text(MODEL)
    return str(path)


def test_eval(capsys, model_file):
    assert run(capsys, "eval", model_file, "(O p q)") == (0, "true", "")
    assert run(capsys, "eval", model_file, "(O (not p) q)")[:2] == (1, "false")


def test_eval_bad_model(capsys, tmp_path):
    bad = tmp_path / "bad.model"
    bad.write_text("(model (worlds 2) (spheres (s 5)))")
    code, _, err = run(capsys, "eval", str(bad), "p")
    assert code == 2 and err
    assert run(capsys, "eval", str(tmp_path / "missing"), "p")[0] == 2


def test_validity(capsys):
    assert run(capsys, "validity", "(imp (O p q) (P p q))") == (0, "valid (bounds: 3 worlds)", "")
    code, out, _ = run(capsys, "validity", "(imp (O p q) (O p (and q r)))", "--max-worlds", "2")
    assert code == 1
    assert parse_model(out).n_worlds <= 2


def test_validity_atoms_flag(capsys):
    code, out, _ = run(capsys, "validity", "(or p (not p))", "--atoms", "p", "--max-worlds", "1")
    assert (code, out) == (0, "valid (bounds: 1 worlds)")


def test_translate(capsys):
    code, out, _ = run(capsys, "translate", "(O p q)")
    assert code == 0
    assert out == "(lab circ (and (lab bullet q) (lab star (imp q p))))"


def test_parse_error_exit(capsys):
    code, out, err = run(capsys, "translate", "(O p")
    assert code == 2 and out == "" and err.startswith("parse error")


@pytest.mark.parametrize("path", HILBERT_FIXTURES, ids=lambda p: p.stem)
def test_check_hilbert_fixtures(capsys, path):
    code, out, _ = run(capsys, "check-hilbert", str(path))
    assert code == 0 and out.startswith("ok ")


def test_check_hilbert_rejects(capsys, tmp_path):
    bad = tmp_path / "bad.proof"
    bad.write_text("(proof (line (imp p p) (mp 1 2)))")
    code, out, _ = run(capsys, "check-hilbert", str(bad))
    assert code == 1 and out.startswith("error (line 1) ")


@pytest.mark.parametrize("path", ND_FIXTURES, ids=lambda p: p.stem)
def test_check_nd_fixtures(capsys, path):
    code, out, _ = run(capsys, "check-nd", str(path))
    assert code == 0 and out.startswith("ok ") and out.endswith("(ctx)")


def test_check_nd_rejects(capsys, tmp_path):
    bad = tmp_path / "bad.nd"
    bad.write_text(format_derivation(imp_i(hyp(2, p), p, 1)))
    code, out, _ = run(capsys, "check-nd", str(bad))
    assert code == 1 and out == "error (path 0) UndischargedHypothesis: hypothesis 2 is never discharged"


def test_gen_template_matches_fixture(capsys, tmp_path):
    out_file = tmp_path / "r3.nd"
    code, out, _ = run(capsys, "gen-template", "R3", "(and p q)", "(and q p)", "r", "--out", str(out_file))
    assert code == 0 and out == f"wrote {out_file}"
    fixture = next(p for p in ND_FIXTURES if p.stem == "r3")
    assert out_file.read_text() == fixture.read_text()
    assert run(capsys, "check-nd", str(out_file))[0] == 0


def test_gen_template_aux_file(capsys, tmp_path):
    aux = tmp_path / "aux.nd"
    aux.write_text(format_derivation(transfer(and_commutation(p, q))))
    code, out, _ = run(capsys, "gen-template", "R3", "(and p q)", "(and q p)", "r", "--aux", str(aux))
    assert code == 0 and out.startswith("(node imp-i")
    aux.write_text(format_derivation(premise(iff(And(p, q), p))))
    assert run(capsys, "gen-template", "R3", "(and p q)", "(and q p)", "r", "--aux", str(aux))[0] == 2


def test_gen_template_needs_aux(capsys):
    code, _, err = run(capsys, "gen-template", "R3", "p", "q", "r")
    assert code == 2 and "--aux" in err


def test_gen_template_plain(capsys):
    code, out, _ = run(capsys, "gen-template", "A3", "p", "q", "r")
    assert code == 0 and out.startswith("(node ")


def test_axiom_suite(capsys, tmp_path):
    out_file = tmp_path / "suite.txt"
    code, _, _ = run(capsys, "axiom-suite", "--max-worlds", "2", "--atoms", "p,q", "--out", str(out_file))
    text = out_file.read_text()
    assert code == 0
    assert "A1" in text and "control" in text.lower()


def test_console_entry_point():
    done = subprocess.run(
        [sys.executable, "-m", "deontic_co.cli", "translate", "(P p q)"], capture_output=True, text=True
    )
    assert done.returncode == 0
    assert done.stdout.strip() == "(not (lab circ (and (lab bullet q) (lab star (imp q (not p))))))"
