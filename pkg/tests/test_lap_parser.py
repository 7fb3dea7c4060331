"""Concrete syntax of LAp: sorts, printing and error positions."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lapinterp.lap import (
    FIELD,
    INDEX,
    MATRIX,
    GenConfig,
    LapSortError,
    LapSyntaxError,
    TermGen,
    expand_all,
    parse_formula,
    parse_sequent,
    parse_term,
    show,
)
from lapinterp.lap.ast import Sequent


@pytest.mark.parametrize(
    "src,sort",
    [
        ("i + j * 2", INDEX),
        ("a * b + 1", FIELD),
        ("A * B", MATRIX),
        ("e(A, 1, 2) + 1", FIELD),
        ("p(n + 1, A)", MATRIX),
        ("r(A) - c(A)", INDEX),
        ("(1 : field)", FIELD),
        ("0", INDEX),
    ],
)
def test_sorts_are_inferred(src, sort):
    assert parse_term(src).sort == sort


def test_transpose_lambda_prints_as_written():
    src = "lambda i j <c(A), r(A), e(A, j, i)>"
    assert show(parse_term(src)) == src


def test_max_abbreviation_expands_to_cond():
    assert show(expand_all(parse_term("max(i, j)"))) == "cond(i <= j, j, i)"


def test_transpose_expands_to_lambda():
    assert show(expand_all(parse_term("transpose(A)"))) == "lambda i j <c(A), r(A), e(A, j, i)>"


def test_a36_succedent():
    s = parse_sequent("|- p(n + 1, A) = p(n, A) * A")
    assert isinstance(s, Sequent)
    assert s.ante == () and len(s.succ) == 1


def test_error_positions():
    with pytest.raises(LapSyntaxError) as err:
        parse_term("e(A,1")
    assert (err.value.line, err.value.column) == (1, 6)


def test_sort_mismatch():
    with pytest.raises(LapSortError, match="expected matrix"):
        parse_term("A + i")


def test_field_constants_are_restricted():
    with pytest.raises(LapSortError):
        parse_term("(2 : field)")


def test_lambda_binders_must_be_index_names():
    with pytest.raises(LapSyntaxError):
        parse_term("lambda A j <1, 1, 0>")
    with pytest.raises(LapSyntaxError):
        parse_term("lambda i i <1, 1, 0>")


def test_formula_variable_in_cond():
    phi = parse_formula("cond(alpha, i, j) = i | !alpha")
    assert "alpha" in show(phi)


def test_unicode_turnstile_and_lambda():
    assert parse_sequent("→ i = i") == parse_sequent("|- i = i")
    assert parse_term("λ i j <1, 1, 0>") == parse_term("lambda i j <1, 1, 0>")


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([INDEX, FIELD, MATRIX]))
def test_printing_round_trips_random_terms(seed, sort):
    gen = TermGen(random.Random(seed), GenConfig(depth=3))
    t = gen.term(sort, 3)
    assert parse_term(show(t)) == t
