"""Strings of the two-sorted standard model.

A string is a finite set of natural numbers, read as a bit string whose bit
``t`` is 1 iff ``t`` is in the set.  Equality is set equality.

The module also provides the pairing function and the list/table encodings
built on it (Row, Row2, seq, entry) together with their inverse encoders.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, Iterator, Sequence


class BitString:
    """Immutable finite subset of N.

    The set is stored sparsely (a frozenset of positions) because the nested
    pairing encodings put a handful of ones at positions in the millions.
    ``mask`` gives the same set as a Python integer and is built on demand;
    the integer arithmetic in :mod:`lapinterp.zint` works on it.
    """

    __slots__ = ("_set", "_sorted", "_mask")

    def __init__(self, mask: int = 0):
        if mask < 0:
            raise ValueError("bit mask must be non-negative")
        # positions are extracted lazily: integer arithmetic builds many
        # strings that are only ever read back through ``mask``
        object.__setattr__(self, "_set", None)
        object.__setattr__(self, "_sorted", None)
        object.__setattr__(self, "_mask", mask)

    @property
    def _pos(self) -> frozenset:
        if self._set is None:
            digits = bin(self._mask)[:1:-1]
            pos = []
            at = digits.find("1")
            while at >= 0:
                pos.append(at)
                at = digits.find("1", at + 1)
            object.__setattr__(self, "_set", frozenset(pos))
            object.__setattr__(self, "_sorted", tuple(pos))
        return self._set

    def __setattr__(self, name, value):
        raise AttributeError("BitString is immutable")

    @classmethod
    def from_positions(cls, positions: Iterable[int]) -> "BitString":
        pos = frozenset(positions)
        if pos and min(pos) < 0:
            raise ValueError(f"negative bit position {min(pos)}")
        return cls._of(pos)

    @classmethod
    def _of(cls, pos: frozenset) -> "BitString":
        out = object.__new__(cls)
        object.__setattr__(out, "_set", pos)
        object.__setattr__(out, "_sorted", None)
        object.__setattr__(out, "_mask", None)
        return out

    @classmethod
    def parse(cls, text: str) -> "BitString":
        """Read ``{0,3,4}`` set syntax or ``10011`` low-bit-first syntax."""
        text = text.strip()
        if text.startswith("{"):
            if not text.endswith("}"):
                raise ValueError(f"unterminated set literal: {text!r}")
            body = text[1:-1].strip()
            if not body:
                return cls()
            return cls.from_positions(int(tok) for tok in body.split(","))
        if text in ("", "e", "empty"):
            return cls()
        if set(text) - {"0", "1"}:
            raise ValueError(f"not a bit string literal: {text!r}")
        return cls.from_positions(i for i, ch in enumerate(text) if ch == "1")

    @property
    def mask(self) -> int:
        if self._mask is None:
            m = 0
            for p in self._pos:
                m |= 1 << p
            object.__setattr__(self, "_mask", m)
        return self._mask

    def _ordered(self) -> tuple:
        if self._sorted is None:
            object.__setattr__(self, "_sorted", tuple(sorted(self._pos)))
        return self._sorted

    def __len__(self) -> int:
        if self._set is None:
            return self._mask.bit_length()
        return self._ordered()[-1] + 1 if self._set else 0

    def __getitem__(self, t: int) -> bool:
        if self._set is None:
            return t >= 0 and bool(self._mask >> t & 1)
        return t in self._set

    def __iter__(self) -> Iterator[int]:
        return self.positions()

    def positions(self) -> Iterator[int]:
        """Set positions in increasing order."""
        return iter(self._ordered())

    def popcount(self) -> int:
        if self._set is None:
            return bin(self._mask).count("1")
        return len(self._set)

    def with_bit(self, t: int, value: bool = True) -> "BitString":
        if value:
            if t < 0:
                raise ValueError(f"negative bit position {t}")
            return BitString._of(self._pos | {t})
        return BitString._of(self._pos - {t})

    def flip(self, t: int) -> "BitString":
        return BitString._of(self._pos ^ {t})

    def issubset(self, other: "BitString") -> bool:
        return self._pos <= other._pos

    def __or__(self, other: "BitString") -> "BitString":
        return BitString._of(self._pos | other._pos)

    def __and__(self, other: "BitString") -> "BitString":
        return BitString._of(self._pos & other._pos)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitString):
            return False
        if self._set is None and other._set is None:
            return self._mask == other._mask
        return self._pos == other._pos

    def __hash__(self) -> int:
        return hash(self._pos)

    def to_text(self) -> str:
        """Low-bit-first 0/1 text; the empty string prints as ``{}``."""
        if not self._pos:
            return "{}"
        return "".join("1" if i in self._pos else "0" for i in range(len(self)))

    def to_set_text(self) -> str:
        return "{" + ",".join(str(p) for p in self.positions()) + "}"

    def __repr__(self) -> str:
        return f"BitString({self.to_set_text()!r})"


EMPTY = BitString()


def length(X: BitString) -> int:
    """|X|: one plus the largest element, 0 for the empty set."""
    return len(X)


def bin_value(X: BitString) -> int:
    """The number sum_i 2^i X(i) a string represents, which is its mask."""
    return X.mask


# -- pairing ---------------------------------------------------------------


def pair(x: int, y: int) -> int:
    s = x + y
    return s * (s + 1) + 2 * y


def tuple_code(*xs: int) -> int:
    """Right-nested k-ary tupling <x1, <x2, ..., xk>>."""
    if not xs:
        raise ValueError("tuple_code needs at least one component")
    code = xs[-1]
    for x in reversed(xs[:-1]):
        code = pair(x, code)
    return code


def unpair(z: int) -> tuple[bool, int, int]:
    """Invert :func:`pair`; left and right are 0 when z is not a pair code."""
    if z < 0:
        return False, 0, 0
    # largest s with s(s+1) <= z
    s = (isqrt(4 * z + 1) - 1) // 2
    rest = z - s * (s + 1)
    if rest % 2 or rest // 2 > s:
        return False, 0, 0
    y = rest // 2
    return True, s - y, y


def is_pair(z: int) -> bool:
    return unpair(z)[0]


def left(z: int) -> int:
    return unpair(z)[1]


def right(z: int) -> int:
    return unpair(z)[2]


# -- rows, sequences and entries ------------------------------------------


def row(x: int, Z: BitString) -> BitString:
    """Z^[x]: bit i set iff i < |Z| and Z(<x,i>)."""
    out = []
    for p in Z.positions():
        ok, a, b = unpair(p)
        if ok and a == x:
            out.append(b)
    return BitString.from_positions(out)


def row2(x: int, y: int, Z: BitString) -> BitString:
    """Z^[x][y]."""
    return row(y, row(x, Z))


def seq(x: int, Z: BitString) -> int:
    """(Z)^x: least y < |Z| with Z(<x,y>), or |Z| when there is none."""
    best = None
    for p in Z.positions():
        ok, a, b = unpair(p)
        if ok and a == x and (best is None or b < best):
            best = b
    return len(Z) if best is None else best


def entry(i: int, j: int, Z: BitString) -> int:
    return seq(j, row(i, Z))


def encode_list(strings: Sequence[BitString]) -> BitString:
    """String Z with Z^[x] = strings[x]."""
    return BitString.from_positions(
        pair(x, b) for x, s in enumerate(strings) for b in s.positions()
    )


def encode_table(table: Sequence[Sequence[BitString]]) -> BitString:
    """String Z with Row2(x, y, Z) = table[x][y]."""
    return encode_list([encode_list(r) for r in table])


def encode_numbers(values: Sequence[int]) -> BitString:
    """String Z with seq(x, Z) = values[x]."""
    return BitString.from_positions(pair(x, v) for x, v in enumerate(values))


def encode_number_table(table: Sequence[Sequence[int]]) -> BitString:
    """String Z with entry(i, j, Z) = table[i][j]."""
    return encode_list([encode_numbers(r) for r in table])


def decode_list(n: int, Z: BitString) -> list[BitString]:
    return [row(x, Z) for x in range(n)]


def decode_numbers(n: int, Z: BitString) -> list[int]:
    return [seq(x, Z) for x in range(n)]
