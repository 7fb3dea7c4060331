"""Binary integers over strings.

Bit 0 of a string is the sign (set means negative) and bits 1, 2, ... hold the
magnitude least-significant first, so the value of ``X`` is
``(-1)**X(0) * bin(intsize(X))``.  Constructors normalize zero to the empty
string; comparisons go through :func:`value_equal`, which treats a set sign bit
on a zero magnitude as +0.

The arithmetic works on magnitudes with carry/borrow propagation expressed as
word-parallel bit operations; Python's integer ``+``/``-``/``*`` are never
applied to magnitudes.  :func:`value` (via ``bin``) is the bridge back to
ordinary integers and serves as the reference in tests.
"""

from __future__ import annotations

from typing import Sequence

from .bitstring import BitString, bin_value, decode_list, encode_list, unpair


class DecodeError(ValueError):
    pass


# -- natural-number magnitudes (bit masks) ---------------------------------


def add_nat(a: int, b: int) -> int:
    while b:
        carry = (a & b) << 1
        a ^= b
        b = carry
    return a


def sub_nat(a: int, b: int) -> int:
    """a - b for magnitudes with a >= b, by subtract-with-borrow."""
    if cmp_nat(a, b) < 0:
        raise ValueError("sub_nat needs a >= b")
    while b:
        borrow = (~a & b) << 1
        a ^= b
        b = borrow
    return a


def cmp_nat(a: int, b: int) -> int:
    diff = a ^ b
    if not diff:
        return 0
    top = 1 << (diff.bit_length() - 1)
    return 1 if a & top else -1


def mul_nat(a: int, b: int) -> int:
    acc = 0
    shift = 0
    while b:
        if b & 1:
            acc = add_nat(acc, a << shift)
        b >>= 1
        shift += 1
    return acc


def sum_nat(values: Sequence[int]) -> int:
    acc = 0
    for v in values:
        acc = add_nat(acc, v)
    return acc


# -- signed encodings ------------------------------------------------------


def _make(negative: bool, magnitude: int) -> BitString:
    if magnitude == 0:
        return BitString()
    return BitString((magnitude << 1) | (1 if negative else 0))


def encode_int(v: int) -> BitString:
    if v < 0:
        return BitString(((-v) << 1) | 1)
    return BitString(v << 1)


def intsize(X: BitString) -> BitString:
    """Delete the low-order (sign) bit."""
    return BitString(X.mask >> 1)


def is_negative(X: BitString) -> bool:
    return X[0]


def value(X: BitString) -> int:
    mag = bin_value(intsize(X))
    return -mag if X[0] else mag


def is_zero(X: BitString) -> bool:
    return X.mask >> 1 == 0


def value_equal(X: BitString, Y: BitString) -> bool:
    mx, my = X.mask >> 1, Y.mask >> 1
    if mx != my:
        return False
    return mx == 0 or X[0] == Y[0]


def normalize(X: BitString) -> BitString:
    return _make(X[0], X.mask >> 1)


def flip_sign(X: BitString) -> BitString:
    """Identical to X except on the first bit."""
    return X.flip(0)


def neg_z(X: BitString) -> BitString:
    return _make(not X[0], X.mask >> 1)


def add_z(X: BitString, Y: BitString) -> BitString:
    sx, mx = X[0], X.mask >> 1
    sy, my = Y[0], Y.mask >> 1
    if sx == sy:
        return _make(sx, add_nat(mx, my))
    c = cmp_nat(mx, my)
    if c == 0:
        return BitString()
    if c > 0:
        return _make(sx, sub_nat(mx, my))
    return _make(sy, sub_nat(my, mx))


def sub_z(X: BitString, Y: BitString) -> BitString:
    return add_z(X, flip_sign(Y))


def mul_z(X: BitString, Y: BitString) -> BitString:
    return _make(X[0] != Y[0], mul_nat(X.mask >> 1, Y.mask >> 1))


def encode_int_list(values: Sequence[int]) -> BitString:
    return encode_list([encode_int(v) for v in values])


def decode_int_list(n: int, X: BitString, strict: bool = False) -> list[BitString]:
    """Rows X^[0..n-1]; strict mode rejects bits outside those rows."""
    if strict:
        for p in X.positions():
            ok, i, _ = unpair(p)
            if not ok:
                raise DecodeError(f"bit {p} is not a pair position")
            if i >= n:
                raise DecodeError(f"row {i}: outside the {n}-element list")
    return decode_list(n, X)


def sum_z(n: int, X: BitString, strict: bool = False) -> BitString:
    """Sum of the integers X^[0], ..., X^[n-1].

    Positive and negative entries are summed separately as naturals and the
    negative total is then subtracted from the positive one.
    """
    rows = decode_int_list(n, X, strict=strict)
    pos = sum_nat([r.mask >> 1 for r in rows if not r[0]])
    neg = sum_nat([r.mask >> 1 for r in rows if r[0]])
    return add_z(_make(False, pos), _make(True, neg))


def sum_z_values(values: Sequence[BitString]) -> BitString:
    return sum_z(len(values), encode_list(list(values)))
