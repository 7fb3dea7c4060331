"""Command-line behaviour: outputs, exit codes and determinism."""

from pathlib import Path

import pytest

from lapinterp.cli import main
from lapinterp.cnf import parse_dimacs

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_eval_sigma_identity_over_z2(capsys):
    code, out, _ = run(capsys, "eval", "--ring=z2", "Sigma(identity(3))")
    assert code == 0 and out.strip() == "1"


def test_eval_with_bindings(capsys):
    code, out, _ = run(capsys, "eval", "--ring=z", "e(A,1,2)", "--set", "A=[[3,-4],[0,1]]")
    assert code == 0 and out.strip() == "-4"


def test_parse_prints_normal_form(capsys):
    code, out, _ = run(capsys, "parse", "p(n+1,A) = p(n,A)*A")
    assert code == 0 and out.strip() == "formula: p(n + 1, A) = p(n, A) * A"


def test_syntax_error_is_a_usage_error(capsys):
    code, _, err = run(capsys, "eval", "e(A")
    assert code == 2 and err.startswith("error: 1:4")


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 2 and "invalid choice" in err


def test_check_proof_exit_codes(capsys):
    assert run(capsys, "check-proof", str(FIXTURES / "a36_unit.proof"))[0] == 0
    code, out, _ = run(capsys, "check-proof", str(FIXTURES / "a36_unit.proof"), str(FIXTURES / "bad_cut.proof"))
    assert code == 1 and "line 4" in out


def test_difftest_passes_and_is_deterministic(capsys):
    first = run(capsys, "difftest", "--ring=z", "--trials=40", "--seed=3", "--format=kv")
    second = run(capsys, "difftest", "--ring=z", "--trials=40", "--seed=3", "--format=kv")
    assert first[0] == 0
    strip = lambda text: [l for l in text.splitlines() if not l.startswith("seconds=")]
    assert strip(first[1]) == strip(second[1])


def test_translate_to_file(capsys, tmp_path):
    target = tmp_path / "out.2s"
    code, _, _ = run(capsys, "translate", "--target", "z", "Sigma(lambda i j <2,2,-1>) = a", "--out", str(target))
    assert code == 0
    assert "(eqz (Fsum (lamz i j 2 2 (negz (OneZ)))) X:a)" in target.read_text()


def test_translate_inverse_over_z_fails(capsys):
    code, _, err = run(capsys, "translate", "--target", "z", "inv(a) = a")
    assert code == 2 and "inv" in err


def test_eval2s(capsys):
    code, out, _ = run(capsys, "eval2s", "(PAR X)", "--set", "X={0,3,4}")
    assert code == 0 and out.startswith("true")


def test_emit_cnf_to_file(capsys, tmp_path):
    target = tmp_path / "commute3.cnf"
    code, _, _ = run(capsys, "emit-cnf", "--identity", "commute", "--n", "3", "--out", str(target))
    assert code == 0
    nv, clauses = parse_dimacs(target.read_text())
    assert nv > 18 and clauses


def test_emit_cnf_certify(capsys):
    assert run(capsys, "emit-cnf", "--identity", "commute", "--n", "2", "--certify")[0] == 0
    code, out, _ = run(capsys, "emit-cnf", "--identity", "corrupt", "--n", "2", "--certify")
    assert code == 1 and "A[1,1]" in out


@pytest.mark.parametrize(
    "cmd,expected",
    [
        (["det", "[[1,2],[3,4]]"], "-2"),
        (["charpoly", "--ring", "z2", "[[0,1],[1,0]]"], "1 0 1"),
        (["adjoint", "[[1,2],[3,4]]"], "[[4, -2], [-3, 1]]"),
    ],
)
def test_linear_algebra_commands(capsys, cmd, expected):
    code, out, _ = run(capsys, *cmd)
    assert code == 0 and out.strip() == expected


@pytest.mark.parametrize("suite", ["cayley-hamilton", "det-axioms", "cofactor", "hard-identities", "multiplicativity"])
def test_verify_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--trials", "20", "--format", "kv")
    assert code == 0 and "ok=true" in out


def test_axioms_listing(capsys):
    code, out, _ = run(capsys, "axioms", "--ring", "z")
    assert code == 0
    assert "A21z" in out and "A36" in out


def test_non_square_matrix_is_rejected(capsys):
    code, _, err = run(capsys, "det", "[[1,2]]")
    assert code == 2 and err.startswith("error:")
