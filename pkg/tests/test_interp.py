"""Translations of LAp into two-sorted formulas, checked by evaluating both sides."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lapinterp.bitstring import BitString, pair
from lapinterp.interp import (
    INTERP,
    Comparator,
    DiffConfig,
    TranslationContext,
    TranslationError,
    axiom_corpus,
    differential_test,
    encode_for,
    is_matrix2,
    is_matrixz,
    translate,
    unwrap_matrix2,
    unwrap_matrixz,
    wrap_matrix2,
    wrap_matrixz,
)
from lapinterp.interp.vocab import power2, random_wrapped2, shape2, strip2, stripz, wrap2, wrapz
from lapinterp.lap import GenConfig, MatVal, TermGen, eval_term, parse_formula, parse_term, random_env
from lapinterp.lap.ast import free_var_sorts
from lapinterp.ring import ring_named
from lapinterp.twosorted import Evaluator, classify, spot_check_all
from lapinterp.zint import value
from lapinterp.zmatrix import id_mat, mat2_encode

EV = Evaluator(INTERP)


def eval_formula(src, target, env=None, **ctx_kw):
    """Translate the LAp formula ``src`` and evaluate it on the encoded ``env``."""
    ctx = TranslationContext(target, **ctx_kw)
    out = translate(parse_formula(src), target, ctx)
    return EV.formula(out, encode_for(env or {}, ctx))


def eval_field_z(src, env=None):
    ctx = TranslationContext("z")
    out = translate(parse_term(src), "z", ctx)
    return value(EV.string(out, encode_for(env or {}, ctx)))


def eval_matrix(src, target, env=None):
    ctx = TranslationContext(target)
    out = translate(parse_term(src), target, ctx)
    return EV.string(out, encode_for(env or {}, ctx))


# -- vocabulary ---------------------------------------------------------------------


def test_interpretation_vocabulary_matches_definitions():
    bad = [r for r in spot_check_all(INTERP, samples=30, seed=3) if not r.ok]
    assert not bad, bad


@given(st.integers(0, 5), st.integers(0, 5), st.data())
def test_strip_inverts_wrap(r, c, data):
    cells = data.draw(st.frozensets(st.tuples(st.integers(0, max(r - 1, 0)), st.integers(0, max(c - 1, 0)))))
    Y = BitString.from_positions(pair(i, j) for i, j in cells if i < r and j < c)
    X = wrap2(r, c, Y)
    assert strip2(X) == Y
    assert shape2(X) == (r, c)


@given(st.integers(0, 4), st.integers(0, 4), st.data())
def test_strip_inverts_wrap_over_z(r, c, data):
    rows = [[data.draw(st.integers(-20, 20)) for _ in range(c)] for _ in range(r)]
    M = MatVal.of(rows, cols=c)
    X = wrap_matrixz(M)
    assert wrapz(r, c, stripz(X)) == X
    assert unwrap_matrixz(X) == M


@given(st.integers(0, 4), st.integers(0, 4), st.data())
def test_wrap_round_trip_over_z2(r, c, data):
    rows = [[data.draw(st.integers(0, 1)) for _ in range(c)] for _ in range(r)]
    M = MatVal.of(rows, cols=c)
    X = wrap_matrix2(M)
    assert is_matrix2(X)
    assert unwrap_matrix2(X) == M


def test_ill_formed_string_is_empty_matrix():
    junk = BitString.parse("{1,2,3}")
    assert not is_matrix2(junk)
    assert unwrap_matrix2(junk) == MatVal(0, 0, ())
    two_headers = wrap2(1, 1, BitString()) | wrap2(2, 2, BitString())
    assert not is_matrix2(two_headers)


def test_fp_squares_to_identity():
    X = wrap2(2, 2, mat2_encode([[1, 1], [0, 1]]))
    assert power2(2, X) == wrap2(2, 2, id_mat(2))


def test_zeroth_power_of_a_tall_matrix():
    X = wrap2(3, 2, mat2_encode([[1, 0], [1, 1], [0, 1]]))
    assert power2(0, X) == wrap2(3, 3, id_mat(3))
    A = MatVal.of([[1, 0], [1, 1], [0, 1]])
    assert unwrap_matrix2(eval_matrix("p(0, A)", "z2", {"A": A})) == MatVal.identity(3)


# -- index terms -------------------------------------------------------------------


@pytest.mark.parametrize("src,val", [("div(7, 2)", 3), ("div(5, 0)", 0), ("cond(1 <= 2, 9, 4)", 9), ("rem(9, 4)", 1), ("2 - 7", 0)])
def test_index_terms(src, val):
    ctx = TranslationContext("z2")
    assert EV.num(translate(parse_term(src), "z2", ctx), {}) == val


# -- field terms over Z2 -----------------------------------------------------------


def test_one_plus_one_is_false():
    ctx = TranslationContext("z2")
    assert not EV.formula(translate(parse_term("(1 + 1 : field)"), "z2", ctx), {})


def test_product_of_field_variables():
    ctx = TranslationContext("z2")
    phi = translate(parse_term("a * b"), "z2", ctx)
    assert not EV.formula(phi, encode_for({"a": 1, "b": 0}, ctx))
    assert EV.formula(phi, encode_for({"a": 1, "b": 1}, ctx))


def test_sigma_of_identity_counts_the_header_bit():
    # the wrapped I2 has a header bit and two entry bits: odd, so not-PAR is false
    ctx = TranslationContext("z2")
    assert not EV.formula(translate(parse_term("Sigma(identity(2))"), "z2", ctx), {})
    assert EV.formula(translate(parse_term("Sigma(identity(3))"), "z2", ctx), {})


# -- field terms over Z ------------------------------------------------------------


def test_z_field_examples():
    assert eval_field_z("(1 - 1 : field)") == 0
    A = MatVal.of([[3, -4], [0, 1]])
    assert eval_field_z("e(A, 1, 2)", {"A": A}) == -4
    assert eval_field_z("Sigma(lambda i j <2, 2, -1>)") == -4
    assert eval_field_z("trace(A)", {"A": A}) == 4


def test_inverse_has_no_integer_translation():
    with pytest.raises(TranslationError, match="inv"):
        translate(parse_term("inv(a) + 1"), "z")


def test_variable_naming():
    ctx = TranslationContext("z")
    translate(parse_formula("a = e(A, i, j) | alpha"), "z", ctx)
    assert ctx.var_map() == {"i": "i", "j": "j", "a": "X:a", "A": "A", "alpha": "P:alpha"}


# -- matrix equality ----------------------------------------------------------------


def test_equality_of_junk_strings():
    ctx = TranslationContext("z2")
    phi = translate(parse_formula("A = B"), "z2", ctx)
    env = {"A": BitString.parse("{1,2}"), "B": BitString.parse("{5,7,9}")}
    assert EV.formula(phi, env)


@pytest.mark.parametrize("target", ["z2", "z"])
def test_reflexivity_on_arbitrary_strings(target):
    ctx = TranslationContext(target)
    phi = translate(parse_formula("A = A"), target, ctx)
    rng = random.Random(1)
    for _ in range(30):
        X = BitString.from_positions(rng.sample(range(60), rng.randint(0, 8)))
        assert EV.formula(phi, {"A": X})


@pytest.mark.parametrize("target", ["z2", "z"])
def test_length_bound_agrees_with_dimension_bound(target):
    rng = random.Random(4)
    ring = ring_named(target)
    # the length bound quantifies up to |A| + |B|, so only tiny shapes are affordable
    sources = ["A = B", "A * B = B * A", "A + B = B", "transpose(A) = B", "p(2, A) = A"]
    for src in sources:
        phi = parse_formula(src)
        for _ in range(6):
            env = random_env(dict(free_var_sorts(phi)), rng, ring, size_bound=1, entry_bound=1)
            if rng.random() < 0.3:
                env["B"] = env["A"]
            results = {eval_formula(src, target, env, equality_bound=b) for b in ("dims", "length")}
            assert len(results) == 1, (src, env)


# -- whole formulas ------------------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["z2", "z"]))
def test_translations_are_bounded_formulas(seed, target):
    gen = TermGen(random.Random(seed), GenConfig(depth=4, inverse=target == "z2"))
    phi = gen.formula(4)
    assert classify(translate(phi, target)) == "SigmaB0"


@pytest.mark.parametrize("target", ["z2", "z"])
def test_translated_matrix_terms_are_well_formed(target):
    rng = random.Random(f"wellformed/{target}")
    ring = ring_named(target)
    gen = TermGen(rng, GenConfig(depth=3, size_bound=3, inverse=target == "z2"))
    check = is_matrix2 if target == "z2" else is_matrixz
    count = 0
    while count < 1000:
        t = gen.matrix(3)
        if type(t).__name__ == "Var":
            continue
        ctx = TranslationContext(target)
        out = translate(t, target, ctx)
        env = random_env(dict(free_var_sorts(t)), rng, ring, size_bound=3, entry_bound=5)
        X = EV.string(out, encode_for(env, ctx))
        assert check(X), t
        unwrap = unwrap_matrix2 if target == "z2" else unwrap_matrixz
        assert unwrap(X) == eval_term(t, env, target)
        count += 1


@pytest.mark.parametrize("target", ["z2", "z"])
def test_a36_translation_holds(target):
    ctx = TranslationContext(target)
    from lapinterp.lap import instantiate

    phi = translate(instantiate("A36"), target, ctx)
    rng = random.Random(9)
    for _ in range(40):
        env = random_env({"n": "index", "A": "matrix"}, rng, ring_named(target), size_bound=4)
        env["n"] = rng.randint(0, 3)
        assert EV.formula(phi, encode_for(env, ctx))


@pytest.mark.parametrize("ring", ["z2", "z"])
def test_small_differential_run(ring):
    report = differential_test(ring, DiffConfig(trials=80, seed=5))
    assert report.ok, report.describe()
    assert 0 < report.true_count < report.trials  # both outcomes occur


def test_comparator_on_a_hand_formula():
    A = MatVal.of([[1, 1], [0, 1]])
    direct, translated = Comparator("z2").both(parse_formula("p(2, A) = identity(2)"), {"A": A})
    assert direct and translated


def test_axiom_corpus_small():
    report = axiom_corpus("z", instances=2)
    assert report.ok, report.describe()
