"""Bit strings, the pairing function and the Row/seq/entry projections."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lapinterp.bitstring import (
    BitString,
    bin_value,
    decode_list,
    decode_numbers,
    encode_list,
    encode_number_table,
    encode_numbers,
    encode_table,
    entry,
    left,
    length,
    pair,
    right,
    row,
    row2,
    seq,
    tuple_code,
    unpair,
)

small_sets = st.frozensets(st.integers(0, 80), max_size=12).map(BitString.from_positions)


def test_length_and_bin_of_worked_example():
    X = BitString.parse("{0,3,4}")
    assert length(X) == 5
    assert bin_value(X) == 25


def test_empty_string():
    assert length(BitString()) == 0
    assert bin_value(BitString()) == 0


def test_parse_both_syntaxes_agree():
    assert BitString.parse("10011") == BitString.parse("{0,3,4}")
    assert BitString.parse("{0,3,4}").to_text() == "10011"


@pytest.mark.parametrize("bad", ["{1,2", "10a1"])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        BitString.parse(bad)


def test_pair_values():
    assert pair(1, 2) == 16
    assert pair(2, 1) == 14
    assert pair(0, 0) == 0


def test_unpair_of_non_pair():
    assert unpair(1) == (False, 0, 0)
    assert left(1) == 0 and right(1) == 0


def test_pairing_is_injective_and_inverted():
    seen = {}
    for x, y in itertools.product(range(65), repeat=2):
        z = pair(x, y)
        assert z not in seen
        seen[z] = (x, y)
        assert unpair(z) == (True, x, y)
    # codes below 65*66 belong to pairs with x + y <= 64, all of them seen above
    for z in range(65 * 66):
        ok, x, y = unpair(z)
        assert ok == (z in seen)
        if ok:
            assert seen[z] == (x, y)


def test_tuple_code_nests_to_the_right():
    assert tuple_code(1, 2, 3) == pair(1, pair(2, 3))
    with pytest.raises(ValueError):
        tuple_code()


def test_row_list_round_trip_all_shapes():
    for n in range(6):
        for width in range(6):
            strings = [BitString.from_positions(range(i % (width + 1))) for i in range(n)]
            Z = encode_list(strings)
            assert decode_list(n, Z) == strings


def test_row2_table_round_trip():
    for r, c in itertools.product(range(1, 6), repeat=2):
        table = [[BitString.from_positions([i, j + 1]) for j in range(c)] for i in range(r)]
        Z = encode_table(table)
        assert all(row2(i, j, Z) == table[i][j] for i in range(r) for j in range(c))


def test_seq_and_entry_round_trip():
    for r, c in itertools.product(range(1, 6), repeat=2):
        table = [[(3 * i + j) % 7 for j in range(c)] for i in range(r)]
        Z = encode_number_table(table)
        assert all(entry(i, j, Z) == table[i][j] for i in range(r) for j in range(c))
        flat = [v for rw in table for v in rw]
        assert decode_numbers(len(flat), encode_numbers(flat)) == flat


def test_seq_missing_index_returns_length():
    Z = encode_numbers([4, 1])
    assert seq(5, Z) == length(Z)


@given(small_sets)
def test_length_is_one_past_the_top(X):
    top = max(X.positions(), default=-1)
    assert length(X) == top + 1


@given(small_sets, st.integers(0, 90))
def test_flip_changes_exactly_one_bit(X, t):
    Y = X.flip(t)
    assert Y[t] != X[t]
    assert set(X.positions()) ^ set(Y.positions()) == {t}


@given(st.lists(small_sets, max_size=5))
def test_row_inverts_encode_list(strings):
    Z = encode_list(strings)
    for x, s in enumerate(strings):
        assert row(x, Z) == s


@given(small_sets)
def test_text_round_trip(X):
    assert BitString.parse(X.to_text()) == X
    assert BitString.parse(X.to_set_text()) == X


@given(small_sets)
def test_bin_value_is_the_positional_sum(X):
    assert bin_value(X) == sum(2**i for i in X.positions())


@given(st.integers(0, 2**90))
def test_mask_and_positions_agree(m):
    X = BitString(m)
    Y = BitString.from_positions(i for i in range(m.bit_length()) if m >> i & 1)
    assert X == Y and Y == X
    assert hash(X) == hash(Y)
    assert len(X) == len(Y) and X.popcount() == Y.popcount()
    assert all(X[i] == Y[i] for i in range(-1, m.bit_length() + 2))
