"""Standard-model evaluation of LAp terms over Z2 and Z."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lapinterp.lap import (
    GenConfig,
    LapEvaluator,
    MatVal,
    TermGen,
    eval_term,
    expand_all,
    parse_formula,
    parse_sequent,
    parse_term,
    random_env,
)
from lapinterp.lap.ast import free_var_sorts
from lapinterp.ring import ring_named

A = MatVal.of([[1, 2], [3, 4]])
B = MatVal.of([[1], [1], [1]])
C = MatVal.of([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
ENV = {"A": A, "B": B, "C": C}


def ev(src, ring="z", env=ENV):
    return eval_term(parse_term(src), env, ring)


def test_sigma_of_constant_lambda():
    assert ev("Sigma(lambda i j <2, 2, 1>)") == 4


def test_trace_of_identity():
    assert ev("trace(identity(3))") == 3
    assert ev("Sigma(identity(3))", ring="z2") == 1


def test_decomposition():
    assert ev("M(C)").tolist() == [[5, 6], [8, 9]]
    assert ev("R(C)").tolist() == [[2, 3]]
    assert ev("S(C)").tolist() == [[4], [7]]


def test_sum_zero_extends():
    S = ev("A + B")
    assert (S.rows, S.cols) == (3, 2)
    assert S.tolist() == [[2, 2], [4, 4], [1, 0]]


@pytest.mark.parametrize("src,val", [("div(5, 0)", 0), ("div(7, 2)", 3), ("rem(7, 2)", 1), ("3 - 5", 0), ("max(2, 9)", 9)])
def test_index_arithmetic(src, val):
    assert ev(src) == val


def test_entries_outside_are_zero():
    assert ev("e(A, 1, 2)") == 2
    assert ev("e(A, 0, 5)") == 0
    assert ev("e(A, 3, 1)") == 0


def test_zeroth_power_is_identity_of_row_count():
    P = ev("p(0, lambda i j <3, 2, 1>)")
    assert P == MatVal.identity(3)


def test_powers_over_z():
    assert ev("p(2, lambda i j <2, 2, 1>)").tolist() == [[2, 2], [2, 2]]
    assert ev("p(3, A)").tolist() == [[37, 54], [81, 118]]


def test_z2_reduces_entries():
    assert ev("p(2, lambda i j <2, 2, 1>)", ring="z2").tolist() == [[0, 0], [0, 0]]


def test_inverse_over_z2():
    assert eval_term(parse_term("inv((1 : field))"), {}, "z2") == 1
    assert eval_term(parse_term("inv((0 : field))"), {}, "z2") == 0


def test_cond_lambda():
    assert ev("lambda i j <2, 2, cond(i <= j, 1, 0)>").tolist() == [[1, 1], [0, 1]]


def test_matrix_equality_needs_equal_shapes():
    ev_ = LapEvaluator("z")
    assert ev_.formula(parse_formula("zero(2, 0) = zero(2, 0)"), {})
    assert not ev_.formula(parse_formula("zero(2, 0) = zero(0, 2)"), {})
    assert not ev_.formula(parse_formula("A = transpose(A)"), ENV)


def test_sequent_semantics():
    ev_ = LapEvaluator("z")
    assert ev_.sequent(parse_sequent("i = 1 |- i + 1 = 2"), {"i": 1})
    assert ev_.sequent(parse_sequent("i = 1 |- i + 1 = 2"), {"i": 5})  # antecedent false
    assert not ev_.sequent(parse_sequent("|-"), {})


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["z2", "z"]))
def test_derived_operators_mean_their_expansions(seed, ring):
    rng = random.Random(seed)
    gen = TermGen(rng, GenConfig(depth=3, derived=True))
    t = gen.term(rng.choice(["index", "field", "matrix"]), 3)
    env = random_env(dict(free_var_sorts(t)), rng, ring_named(ring), size_bound=3)
    assert eval_term(t, env, ring) == eval_term(expand_all(t), env, ring)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_memo_does_not_change_values(seed):
    rng = random.Random(seed)
    t = TermGen(rng, GenConfig(depth=4)).term("matrix", 4)
    env = random_env(dict(free_var_sorts(t)), rng, ring_named("z"), size_bound=3)
    assert LapEvaluator("z", memo=True).term(t, env) == LapEvaluator("z", memo=False).term(t, env)
