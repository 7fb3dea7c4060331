"""Sign-bit integers; Python's int is the reference throughout."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lapinterp.bitstring import BitString
from lapinterp.zint import (
    DecodeError,
    add_z,
    decode_int_list,
    encode_int,
    encode_int_list,
    flip_sign,
    intsize,
    is_zero,
    mul_z,
    neg_z,
    normalize,
    sub_z,
    sum_z,
    value,
    value_equal,
)

ints = st.integers(-(10**30), 10**30)


def test_intsize_example():
    X = BitString.parse("{0,1,3}")
    assert intsize(X) == BitString.parse("{0,2}")
    assert value(X) == -5


def test_sum_of_small_list():
    assert value(sum_z(3, encode_int_list([1, -2, 3]))) == 2


def test_negative_zero_equals_zero():
    minus_zero = BitString.parse("{0}")
    assert is_zero(minus_zero)
    assert value_equal(minus_zero, BitString())
    assert normalize(minus_zero) == BitString()


def test_zero_is_the_empty_string():
    assert encode_int(0) == BitString()
    assert add_z(encode_int(4), encode_int(-4)) == BitString()


@given(ints)
def test_encode_round_trip(a):
    assert value(encode_int(a)) == a


@given(ints, ints)
def test_add_and_mul_follow_integers(a, b):
    X, Y = encode_int(a), encode_int(b)
    assert value(add_z(X, Y)) == a + b
    assert value(sub_z(X, Y)) == a - b
    assert value(mul_z(X, Y)) == a * b


@given(ints)
def test_negation(a):
    assert value(neg_z(encode_int(a))) == -a
    assert value(flip_sign(encode_int(a))) == -a


@given(ints, ints)
def test_no_zero_divisors(a, b):
    product = mul_z(encode_int(a), encode_int(b))
    assert is_zero(product) == (a == 0 or b == 0)


@given(st.lists(ints, max_size=12))
def test_sum_matches_builtin(values):
    assert value(sum_z(len(values), encode_int_list(values))) == sum(values)


def test_sum_equals_positive_part_minus_negative_part():
    rng = random.Random(7)
    for _ in range(200):
        vs = [rng.randint(-1000, 1000) for _ in range(rng.randint(0, 9))]
        pos = sum(v for v in vs if v > 0)
        neg = sum(-v for v in vs if v < 0)
        assert value(sum_z(len(vs), encode_int_list(vs))) == pos - neg


def test_strict_decode_rejects_stray_bits():
    X = encode_int_list([1, 2]).with_bit(1)  # 1 is not a pair code
    with pytest.raises(DecodeError):
        decode_int_list(2, X, strict=True)
    with pytest.raises(DecodeError, match="outside"):
        decode_int_list(1, encode_int_list([1, 2]), strict=True)
