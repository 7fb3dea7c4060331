"""Matrix encodings and matrix powering over Z2 and Z.

Entries are 0-indexed here.  A matrix over Z2 is a string ``X`` whose bit
``<i,j>`` is the (i,j) entry.  A matrix over Z is an array of integer strings
laid out with Row2, so cell (i,j) occupies the bits ``<i,<j,t>>``.

A power sequence ``[ID(n), X, X^2, ..., X^k]`` is a list of such strings,
encoded with Row.
"""

from __future__ import annotations

from typing import Sequence

from .bitstring import (
    BitString,
    encode_list,
    encode_table,
    pair,
    row,
    row2,
    seq,
    unpair,
)
from .zint import decode_int_list, encode_int, mul_z, sum_z, value


class ShapeError(ValueError):
    pass


# -- Z2 ------------------------------------------------------------------------


def mat2_encode(rows: Sequence[Sequence[int]]) -> BitString:
    return BitString.from_positions(
        pair(i, j) for i, r in enumerate(rows) for j, v in enumerate(r) if v % 2
    )


def mat2_decode(n: int, X: BitString, cols: int | None = None) -> tuple:
    c = n if cols is None else cols
    return tuple(tuple(1 if X[pair(i, j)] else 0 for j in range(c)) for i in range(n))


def check_square2(n: int, X: BitString, what: str = "matrix") -> None:
    for p in X.positions():
        ok, i, j = unpair(p)
        if not ok or i >= n or j >= n:
            raise ShapeError(f"{what}: bit {p} lies outside an {n}x{n} matrix")


def id_mat(n: int) -> BitString:
    return BitString.from_positions(pair(i, i) for i in range(n))


def parity_string(x: int, Y: BitString) -> BitString:
    """Parity(x, Y): bit z (1 <= z <= x) holds the parity of Y(0..z-1)."""
    mask = 0
    acc = False
    for z in range(x):
        acc = acc != Y[z]
        if acc:
            mask |= 1 << (z + 1)
    return BitString(mask)


def par(X: BitString) -> bool:
    """True iff X has an odd number of ones (read off the Parity accumulator)."""
    n = len(X)
    return parity_string(n, X)[n]


def g_string(n: int, i: int, j: int, X: BitString, Y: BitString) -> BitString:
    """Bitwise products of row i of X with column j of Y."""
    return BitString.from_positions(
        b for b in range(n) if X[pair(i, b)] and Y[pair(b, j)]
    )


def prod2(n: int, X: BitString, Y: BitString) -> BitString:
    check_square2(n, X, "left factor")
    check_square2(n, Y, "right factor")
    return BitString.from_positions(
        pair(i, j)
        for i in range(n)
        for j in range(n)
        if par(g_string(n, i, j, X, Y))
    )


def pow_seq2(n: int, k: int, X: BitString) -> BitString:
    check_square2(n, X)
    powers = [id_mat(n)]
    for _ in range(k):
        powers.append(prod2(n, X, powers[-1]))
    return encode_list(powers)


def pow2(n: int, k: int, X: BitString) -> BitString:
    return row(k, pow_seq2(n, k, X))


def powers_of(Y: BitString, k: int) -> list[BitString]:
    return [row(i, Y) for i in range(k + 1)]


def delta_pow_seq2(n: int, k: int, X: BitString, Y: BitString) -> bool:
    """Graph of PowSeq2: identity first, each next entry X times the previous,
    and no bits outside the k+1 list slots."""
    if row(0, Y) != id_mat(n):
        return False
    for i in range(k):
        if row(i + 1, Y) != prod2(n, X, row(i, Y)):
            return False
    for b in Y.positions():
        ok, slot, _ = unpair(b)
        if not ok or slot > k:
            return False
    return True


# -- aggregate powering --------------------------------------------------------


def max_list(n: int, W: BitString) -> int:
    """Largest of the numbers (W)^0, ..., (W)^(n-1); 0 for an empty list."""
    return max((seq(i, W) for i in range(n)), default=0)


def aggregate_s(b: int, W1: BitString, X: BitString) -> BitString:
    """Block-diagonal matrix of the X^[a], each padded to max(b, W1) square."""
    m = max_list(b, W1)
    bits = []
    for a in range(b):
        na = seq(a, W1)
        block = row(a, X)
        check_square2(na, block, f"list entry {a}")
        for p in block.positions():
            _, i, j = unpair(p)
            bits.append(pair(m * a + i, m * a + j))
    return BitString.from_positions(bits)


def pow_seq2_star(b: int, W1: BitString, W2: BitString, X: BitString) -> BitString:
    """All the power sequences PowSeq2(W1^i, W2^i, X^[i]) from one powering
    of the aggregate matrix, followed by block lookup."""
    n_max = max_list(b, W1)
    k_max = max_list(b, W2)
    A = pow_seq2(b * n_max, k_max, aggregate_s(b, W1, X))
    bits = []
    for m in range(b):
        nm, km = seq(m, W1), seq(m, W2)
        off = n_max * m
        for p in range(km + 1):
            Ap = row(p, A)
            for i in range(nm):
                for j in range(nm):
                    if Ap[pair(off + i, off + j)]:
                        bits.append(pair(m, pair(p, pair(i, j))))
    return BitString.from_positions(bits)


def pow_seq2_star_direct(b: int, W1: BitString, W2: BitString, X: BitString) -> BitString:
    return encode_list([pow_seq2(seq(i, W1), seq(i, W2), row(i, X)) for i in range(b)])


def delta_pow_seq2_star(b: int, W1: BitString, W2: BitString, X: BitString, Y: BitString) -> bool:
    n_max = max_list(b, W1)
    k_max = max_list(b, W2)
    if len(Y) >= pair(b, pair(k_max, pair(n_max, n_max))):
        return False
    if any(not unpair(j)[0] for j in Y.positions()):
        return False
    return all(
        delta_pow_seq2(seq(i, W1), seq(i, W2), row(i, X), row(i, Y)) for i in range(b)
    )


# -- Z -----------------------------------------------------------------------


def matz_encode(rows: Sequence[Sequence[int]]) -> BitString:
    return encode_table([[encode_int(v) for v in r] for r in rows])


def matz_cell(i: int, j: int, X: BitString) -> BitString:
    return row2(i, j, X)


def matz_decode(n: int, X: BitString, cols: int | None = None) -> tuple:
    c = n if cols is None else cols
    return tuple(tuple(value(row2(i, j, X)) for j in range(c)) for i in range(n))


def check_squarez(n: int, X: BitString, what: str = "matrix") -> None:
    for p in X.positions():
        ok, i, rest = unpair(p)
        ok2, j, _ = unpair(rest)
        if not (ok and ok2) or i >= n or j >= n:
            raise ShapeError(f"{what}: bit {p} lies outside an {n}x{n} integer matrix")


def id_matz(n: int) -> BitString:
    return encode_table([[encode_int(1 if i == j else 0) for j in range(n)] for i in range(n)])


def prod_z(n: int, X: BitString, Y: BitString) -> BitString:
    """Integer matrix product; each cell is Sum_Z of the n entry products."""
    check_squarez(n, X, "left factor")
    check_squarez(n, Y, "right factor")
    xs = [[row2(i, b, X) for b in range(n)] for i in range(n)]
    ys = [[row2(b, j, Y) for j in range(n)] for b in range(n)]
    cells = []
    for i in range(n):
        out_row = []
        for j in range(n):
            terms = encode_list([mul_z(xs[i][b], ys[b][j]) for b in range(n)])
            out_row.append(sum_z(n, terms))
        cells.append(out_row)
    return encode_table(cells)


def pow_seq_z(n: int, k: int, X: BitString) -> BitString:
    check_squarez(n, X)
    powers = [id_matz(n)]
    for _ in range(k):
        powers.append(prod_z(n, X, powers[-1]))
    return encode_list(powers)


def pow_z(n: int, k: int, X: BitString) -> BitString:
    return row(k, pow_seq_z(n, k, X))


def delta_pow_seq_z(n: int, k: int, X: BitString, Y: BitString) -> bool:
    if row(0, Y) != id_matz(n):
        return False
    for i in range(k):
        if row(i + 1, Y) != prod_z(n, X, row(i, Y)):
            return False
    return all(unpair(b)[0] and unpair(b)[1] <= k for b in Y.positions())


def aggregate_s_z(b: int, W1: BitString, X: BitString) -> BitString:
    m = max_list(b, W1)
    bits = []
    for a in range(b):
        na = seq(a, W1)
        block = row(a, X)
        check_squarez(na, block, f"list entry {a}")
        for p in block.positions():
            _, i, rest = unpair(p)
            _, j, t = unpair(rest)
            bits.append(pair(m * a + i, pair(m * a + j, t)))
    return BitString.from_positions(bits)


def pow_seq_z_star(b: int, W1: BitString, W2: BitString, X: BitString) -> BitString:
    n_max = max_list(b, W1)
    k_max = max_list(b, W2)
    A = pow_seq_z(b * n_max, k_max, aggregate_s_z(b, W1, X))
    bits = []
    for m in range(b):
        nm, km = seq(m, W1), seq(m, W2)
        off = n_max * m
        for p in range(km + 1):
            Ap = row(p, A)
            for i in range(nm):
                for j in range(nm):
                    for t in row2(off + i, off + j, Ap).positions():
                        bits.append(pair(m, pair(p, pair(i, pair(j, t)))))
    return BitString.from_positions(bits)


def pow_seq_z_star_direct(b: int, W1: BitString, W2: BitString, X: BitString) -> BitString:
    return encode_list([pow_seq_z(seq(i, W1), seq(i, W2), row(i, X)) for i in range(b)])


__all__ = [
    "ShapeError",
    "aggregate_s",
    "aggregate_s_z",
    "check_square2",
    "check_squarez",
    "decode_int_list",
    "delta_pow_seq2",
    "delta_pow_seq2_star",
    "delta_pow_seq_z",
    "g_string",
    "id_mat",
    "id_matz",
    "mat2_decode",
    "mat2_encode",
    "matz_cell",
    "matz_decode",
    "matz_encode",
    "max_list",
    "par",
    "parity_string",
    "pow2",
    "pow_seq2",
    "pow_seq2_star",
    "pow_seq2_star_direct",
    "pow_seq_z",
    "pow_seq_z_star",
    "pow_seq_z_star_direct",
    "pow_z",
    "powers_of",
    "prod2",
    "prod_z",
]
