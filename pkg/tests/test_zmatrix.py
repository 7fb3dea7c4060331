"""Matrix products and powering on encoded strings, against list-of-lists oracles."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lapinterp.bitstring import BitString, encode_list, encode_numbers, row
from lapinterp.zmatrix import (
    ShapeError,
    aggregate_s,
    delta_pow_seq2,
    delta_pow_seq2_star,
    delta_pow_seq_z,
    id_mat,
    mat2_decode,
    mat2_encode,
    matz_decode,
    matz_encode,
    par,
    pow2,
    pow_seq2,
    pow_seq2_star,
    pow_seq2_star_direct,
    pow_seq_z,
    pow_seq_z_star,
    pow_seq_z_star_direct,
    pow_z,
    prod2,
    prod_z,
)


def naive_mul(A, B, mod=None):
    n = len(A)
    out = [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[v % mod for v in r] for r in out] if mod else out


def naive_powers(A, k, mod=None):
    n = len(A)
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    out = [P]
    for _ in range(k):
        P = naive_mul(A, P, mod)
        out.append(P)
    return out


def rand_mat(rng, n, lo, hi):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]


def as_tuples(M):
    return tuple(tuple(r) for r in M)


def test_prod2_examples():
    J = mat2_encode([[1, 1], [0, 1]])
    assert prod2(2, J, J) == id_mat(2)
    ones = mat2_encode([[1, 1], [1, 1]])
    assert prod2(2, ones, ones) == BitString()


def test_prodz_example():
    X = matz_encode([[2, 0], [0, 2]])
    Y = matz_encode([[0, -1], [1, 0]])
    assert matz_decode(2, prod_z(2, X, Y)) == ((0, -2), (2, 0))


def test_scalar_power():
    assert matz_decode(1, pow_z(1, 8, matz_encode([[2]]))) == ((256,),)


def test_power_zero_is_identity():
    X = mat2_encode([[1, 0, 1], [1, 1, 0], [0, 1, 1]])
    assert pow2(3, 0, X) == id_mat(3)


def test_shape_check_rejects_bits_outside():
    with pytest.raises(ShapeError):
        prod2(1, mat2_encode([[1, 1], [0, 0]]), id_mat(1))


def test_power_sequences_match_repeated_multiplication():
    rng = random.Random(3)
    for _ in range(60):
        n, k = rng.randint(1, 5), rng.randint(0, 8)
        A2 = rand_mat(rng, n, 0, 1)
        seq2 = pow_seq2(n, k, mat2_encode(A2))
        for p, P in enumerate(naive_powers(A2, k, mod=2)):
            assert mat2_decode(n, row(p, seq2)) == as_tuples(P)
        AZ = rand_mat(rng, n, -3, 3)
        seqz = pow_seq_z(n, k, matz_encode(AZ))
        for p, P in enumerate(naive_powers(AZ, k)):
            assert matz_decode(n, row(p, seqz)) == as_tuples(P)


def test_graph_of_power_sequence():
    rng = random.Random(5)
    for _ in range(30):
        n, k = rng.randint(1, 4), rng.randint(0, 5)
        X = mat2_encode(rand_mat(rng, n, 0, 1))
        Y = pow_seq2(n, k, X)
        assert delta_pow_seq2(n, k, X, Y)
        assert not delta_pow_seq2(n, k, X, Y.flip(0))  # Row 0 stops being the identity
        XZ = matz_encode(rand_mat(rng, n, -2, 2))
        YZ = pow_seq_z(n, k, XZ)
        assert delta_pow_seq_z(n, k, XZ, YZ)


def _aggregate_instance(rng, b, ring):
    ns = [rng.randint(1, 4) for _ in range(b)]
    ks = [rng.randint(0, 5) for _ in range(b)]
    if ring == "z2":
        mats = [mat2_encode(rand_mat(rng, n, 0, 1)) for n in ns]
    else:
        mats = [matz_encode(rand_mat(rng, n, -2, 2)) for n in ns]
    return encode_numbers(ns), encode_numbers(ks), encode_list(mats)


def test_aggregate_matches_direct_over_z2():
    rng = random.Random(11)
    for _ in range(40):
        b = rng.randint(1, 4)
        W1, W2, X = _aggregate_instance(rng, b, "z2")
        Y = pow_seq2_star(b, W1, W2, X)
        assert Y == pow_seq2_star_direct(b, W1, W2, X)
        assert delta_pow_seq2_star(b, W1, W2, X, Y)


def test_aggregate_matches_direct_over_z():
    rng = random.Random(12)
    for _ in range(25):
        b = rng.randint(1, 3)
        W1, W2, X = _aggregate_instance(rng, b, "z")
        assert pow_seq_z_star(b, W1, W2, X) == pow_seq_z_star_direct(b, W1, W2, X)


def test_aggregate_is_block_diagonal():
    W1 = encode_numbers([2, 1])
    X = encode_list([mat2_encode([[1, 1], [0, 1]]), mat2_encode([[1]])])
    S = aggregate_s(2, W1, X)
    assert mat2_decode(4, S) == ((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 0))


def test_par_counts_ones():
    assert par(BitString.parse("{1,4,9}"))
    assert not par(BitString.parse("{1,4}"))
    assert not par(BitString())


@given(st.frozensets(st.integers(0, 200), max_size=40), st.integers(0, 220))
def test_one_bit_flip_flips_parity(bits, t):
    X = BitString.from_positions(bits)
    assert par(X.flip(t)) != par(X)
