"""Characteristic polynomial, determinant and adjoint, with independent oracles."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lapinterp import linalg as L
from lapinterp.ring import identity, mat_mul, ring_named


def matrices(ring, n_max=4):
    lo, hi = (0, 1) if ring == "z2" else (-6, 6)
    return st.integers(0, n_max).flatmap(
        lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=n, max_size=n)
    ).map(lambda rows: tuple(tuple(r) for r in rows))


def test_char_poly_examples():
    assert L.char_poly(((1, 0), (0, 1)), "z") == [1, -2, 1]
    assert L.char_poly(((0, 1), (1, 0)), "z2") == [1, 0, 1]
    assert L.char_poly(((5,),), "z") == [1, -5]
    assert L.char_poly((), "z") == [1]


def test_det_and_adjoint_examples():
    assert L.det(((1, 2), (3, 4))) == -2
    assert L.adjoint(((1, 2), (3, 4))) == ((4, -2), (-3, 1))
    assert L.adjoint(((7,),)) == ((1,),)


@pytest.mark.parametrize("ring", ["z2", "z"])
def test_det_of_identity(ring):
    for n in range(6):
        assert L.det(identity(n), ring) == 1


def test_repeated_row_gives_zero():
    assert L.det(((1, 2, 3), (4, 5, 6), (1, 2, 3))) == 0


def test_row_swap_and_scaling():
    rng = random.Random(0)
    z = ring_named("z")
    A = L.random_matrix(rng, z, 4)
    swapped = (A[1], A[0], A[2], A[3])
    assert L.det(swapped) == -L.det(A)
    scaled = (tuple(3 * v for v in A[0]),) + A[1:]
    assert L.det(scaled) == 3 * L.det(A)
    B = L.random_matrix(rng, ring_named("z2"), 4)
    assert L.det((B[1], B[0], B[2], B[3]), "z2") == L.det(B, "z2")


@settings(max_examples=150, deadline=None)
@given(matrices("z"))
def test_berkowitz_matches_cofactor_over_z(A):
    assert L.char_poly(A, "z") == L.char_poly_cofactor(A, "z")
    assert L.det(A, "z") == L.det_cofactor(A, "z") == L.det_permutation(A, "z")
    assert L.adjoint(A, "z") == L.adjoint_cofactor(A, "z")


@settings(max_examples=150, deadline=None)
@given(matrices("z2", n_max=5))
def test_berkowitz_matches_cofactor_over_z2(A):
    assert L.char_poly(A, "z2") == L.char_poly_cofactor(A, "z2")
    assert L.det(A, "z2") == L.det_permutation(A, "z2")


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(["z2", "z"]).flatmap(lambda r: st.tuples(st.just(r), matrices(r, n_max=5))))
def test_cayley_hamilton(ring_and_matrix):
    ring, A = ring_and_matrix
    assert L.check_cayley_hamilton(A, ring)


@settings(max_examples=100, deadline=None)
@given(matrices("z"))
def test_adjoint_times_matrix_is_det_identity(A):
    z = ring_named("z")
    n = len(A)
    d = L.det(A)
    expected = tuple(tuple(d if i == j else 0 for j in range(n)) for i in range(n))
    assert mat_mul(z, L.adjoint(A), A) == expected
    assert mat_mul(z, A, L.adjoint(A)) == expected


def test_exhaustive_two_by_two():
    assert L.exhaustive_agreement(2, "z2").trials == 16
    assert L.exhaustive_agreement(2, "z2").ok
    assert L.exhaustive_agreement(2, "z", values=range(-2, 3)).ok


def test_inverse_over_gf2():
    rng = random.Random(3)
    z2 = ring_named("z2")
    for _ in range(50):
        A, B = L.invertible_pair(rng, 4, "z2")
        assert mat_mul(z2, A, B) == identity(4)
        assert L.inverse_gf2(A) == B
    assert L.inverse_gf2(((1, 1), (1, 1))) is None


def test_unimodular_pair_over_z():
    rng = random.Random(4)
    z = ring_named("z")
    for _ in range(30):
        A, B = L.invertible_pair(rng, 4, "z")
        assert mat_mul(z, A, B) == identity(4)
        assert L.det(A) in (1, -1)


def test_hard_identities_on_constructed_pairs():
    rng = random.Random(5)
    A, B = L.invertible_pair(rng, 3, "z")
    zero = ((0,) * 3,) * 3
    results = L.hard_identities(A, B, zero, "z")
    assert set(results) == set(L.HARD_IDENTITIES)
    assert all(results.values())


@pytest.mark.parametrize("ring", ["z2", "z"])
@pytest.mark.parametrize(
    "suite",
    [L.check_determinant_axioms, L.check_cofactor, L.check_hard_identities, L.check_multiplicativity],
)
def test_randomized_suites(suite, ring):
    report = suite(trials=60, n_max=4, ring=ring, seed=1)
    assert report.ok, report.describe()


def test_report_records_failures():
    report = L.Report("demo", "z")
    report.fail("something", 1, 2)
    assert not report.ok
    assert "something" in report.describe()
