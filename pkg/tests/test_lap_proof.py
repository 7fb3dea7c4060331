"""Proof checking: shipped fixtures, small inline proofs, and soundness."""

from pathlib import Path

import pytest

from lapinterp.lap import check_proof, check_proof_file, semantic_check_sequent, show

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
ACCEPTED = ["a36_unit", "a36_symmetric", "excluded_middle", "induction_le", "meq_reflexive"]
REJECTED = {
    "bad_axiom_instance": (2, "A36"),
    "bad_cut": (4, "cut"),
    "bad_forward_reference": (2, "earlier"),
    "bad_induction_reversed": (4, "alpha(i+1)"),
    "bad_meq_eigenvariable": (5, "occurs free"),
    "bad_meq_missing_s3": (4, "missing S3"),
}


@pytest.mark.parametrize("name", ACCEPTED)
def test_accepted_fixture(name):
    report = check_proof_file(FIXTURES / f"{name}.proof")
    assert report.accepted, report.describe()


@pytest.mark.parametrize("name", sorted(REJECTED))
def test_rejected_fixture_names_its_line(name):
    lineno, phrase = REJECTED[name]
    report = check_proof_file(FIXTURES / f"{name}.proof")
    assert not report.accepted
    assert report.first_error.lineno == lineno
    assert phrase in report.describe()


@pytest.mark.parametrize("name", ACCEPTED)
@pytest.mark.parametrize("ring", ["z2", "z"])
def test_accepted_conclusions_are_true(name, ring):
    report = check_proof_file(FIXTURES / f"{name}.proof")
    assert semantic_check_sequent(report.conclusion, ring, trials=100).ok


def test_fixture_set_covers_induction_and_matrix_equality():
    texts = {n: (FIXTURES / f"{n}.proof").read_text() for n in ACCEPTED}
    assert any("ind(" in t for t in texts.values())
    assert any("meq(" in t for t in texts.values())


def test_empty_proof_is_rejected():
    assert not check_proof("# only a comment\n").accepted


def test_unknown_rule():
    report = check_proof("1: i = i |- i = i by magic\n")
    assert not report.accepted
    assert report.first_error.lineno == 1


def test_init_must_match_both_sides():
    assert check_proof("1: i = j |- i = j by init\n").accepted
    assert not check_proof("1: i = j |- j = i by init\n").accepted


def test_weakening_then_contraction():
    text = """
1: i = j |- i = j              by init
2: i = j, i = j |- i = j       by weakL(1)
3: i = j |- i = j              by contrL(2)
"""
    report = check_proof(text)
    assert report.accepted, report.describe()
    assert show(report.conclusion) == "i = j |- i = j"


def test_later_lines_cannot_use_rejected_ones():
    text = """
1: i = j |- j = i              by init
2: i = j |- j = i, k = k       by weakR(1)
"""
    report = check_proof(text)
    assert [r.ok for r in report.lines] == [False, False]
