"""Two-sorted formulas: reading, classifying, evaluating, and the base vocabulary."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lapinterp.bitstring import BitString
from lapinterp.twosorted import (
    BASE,
    BudgetExceeded,
    Evaluator,
    FormulaClass,
    SexprError,
    Unsupported,
    check_basic_axioms,
    classify,
    evaluate,
    parse_formula,
    show,
    spot_check_all,
)

PAL = "(forall (x < (len X)) (<-> (in X x) (in X (monus (monus (len X) x) 1))))"


def P(text):
    return parse_formula(text, BASE)


def is_palindrome(X):
    bits = [X[i] for i in range(len(X))]
    return bits == bits[::-1]


def test_palindrome_formula_is_bounded():
    assert classify(P(PAL)) is FormulaClass.SIGMA_B0


@pytest.mark.parametrize("text,expected", [("{0,4}", True), ("{0,1}", True), ("{1,2}", False), ("{}", True)])
def test_palindrome_examples(text, expected):
    assert evaluate(P(PAL), {"X": BitString.parse(text)}, BASE) is expected


@settings(max_examples=150)
@given(st.frozensets(st.integers(0, 9), max_size=8))
def test_palindrome_against_reversal(bits):
    X = BitString.from_positions(bits)
    assert evaluate(P(PAL), {"X": X}, BASE) == is_palindrome(X)


@pytest.mark.parametrize(
    "text,cls",
    [
        ("(exists (Y <= 5) (=2 Y X))", "SigmaB1"),
        ("(forall X (=2 X X))", "Other"),
        ("(forall (x < 3) (exists (Y <= 2) (in Y x)))", "Other"),
        ("(and (in X 0) (< 1 (len X)))", "SigmaB0"),
    ],
)
def test_classification(text, cls):
    assert classify(P(text)) == cls


def test_string_quantifier_with_small_bound():
    assert evaluate(P("(exists (Y <= 5) (=2 Y X))"), {"X": BitString.parse("{1}")}, BASE)
    assert not evaluate(P("(exists (Y <= 2) (=2 Y X))"), {"X": BitString.parse("{4}")}, BASE)


def test_unbounded_number_quantifier_is_refused():
    with pytest.raises(Unsupported):
        evaluate(P("(forall x (= x x))"), {}, BASE)


def test_budget_is_explicit():
    with pytest.raises(BudgetExceeded):
        evaluate(P("(exists (Y <= 40) (=2 Y X))"), {"X": BitString.parse("{30}")}, BASE, budget=1000)


def test_unknown_symbol():
    with pytest.raises(SexprError):
        P("(foo 1)")


def test_show_reads_back():
    phi = P(PAL)
    assert show(P(show(phi))) == show(phi)


def test_b1_over_a_range():
    phi = P("(not (= (+ x 1) 0))")
    assert all(evaluate(phi, {"x": x}, BASE) for x in range(101))


def test_basic_axioms_hold():
    report = check_basic_axioms(range_=20)
    assert report.ok
    assert len(report.checked) == 15


def test_extensionality_example():
    phi = P("(=2 X Y)")
    env = {"X": BitString.parse("{0,2}"), "Y": BitString.parse("{0,2}")}
    assert evaluate(phi, env, BASE)


def test_vocabulary_matches_its_definitions():
    results = spot_check_all(BASE, samples=25, seed=1)
    bad = [r for r in results if not r.ok]
    assert not bad, bad


def test_parity_predicate():
    phi = P("(PAR X)")
    assert evaluate(phi, {"X": BitString.parse("{0,3,4}")}, BASE)
    assert not evaluate(phi, {"X": BitString.parse("{2,5}")}, BASE)
    assert not evaluate(phi, {"X": BitString()}, BASE)


def test_string_terms_evaluate_to_encodings():
    from lapinterp.twosorted.sexpr import parse_string_term
    from lapinterp.zmatrix import id_mat, mat2_encode

    ev = Evaluator(BASE)
    assert ev.string(parse_string_term("(ID 3)", BASE), {}) == id_mat(3)
    J = mat2_encode([[1, 1], [0, 1]])
    assert ev.string(parse_string_term("(Prod2 2 X X)", BASE), {"X": J}) == id_mat(2)


def test_memo_and_plain_evaluators_agree():
    phi = P("(forall (i < 4) (forall (j < 4) (<-> (in (ID 4) (pair i j)) (= i j))))")
    assert Evaluator(BASE, memo=True).formula(phi, {})
    assert Evaluator(BASE, memo=False).formula(phi, {})
