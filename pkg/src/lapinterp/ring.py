"""The two coefficient rings and dense matrices over them.

Matrices are tuples of row tuples.  These helpers are the plain-arithmetic
layer shared by the LAp evaluator and the determinant code; the bit-string
encodings in :mod:`lapinterp.zmatrix` are checked against them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Matrix = tuple  # tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Ring:
    name: str
    modulus: int | None  # None for Z

    def norm(self, v: int) -> int:
        return v % self.modulus if self.modulus else v

    def add(self, a: int, b: int) -> int:
        return self.norm(a + b)

    def sub(self, a: int, b: int) -> int:
        return self.norm(a - b)

    def neg(self, a: int) -> int:
        return self.norm(-a)

    def mul(self, a: int, b: int) -> int:
        return self.norm(a * b)

    def inv(self, a: int) -> int:
        if self.modulus != 2:
            raise ArithmeticError("field inverse is only available over Z2")
        # 0^-1 = 0 over Z2, matching the translation t^-1 -> t
        return a

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def __str__(self) -> str:
        return self.name


Z2 = Ring("z2", 2)
ZZ = Ring("z", None)


def ring_named(name: str) -> Ring:
    key = name.lower()
    if key in ("z2", "gf2", "f2"):
        return Z2
    if key in ("z", "zz", "int"):
        return ZZ
    raise ValueError(f"unknown ring {name!r}; use z2 or z")


def as_matrix(rows: Sequence[Sequence[int]], ring: Ring) -> Matrix:
    return tuple(tuple(ring.norm(v) for v in r) for r in rows)


def zeros(r: int, c: int) -> Matrix:
    return tuple((0,) * c for _ in range(r))


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(ring: Ring, A: Matrix, B: Matrix) -> Matrix:
    inner = len(B)
    cols = len(B[0]) if B else 0
    if A and len(A[0]) != inner:
        raise ValueError("dimension mismatch in matrix product")
    return tuple(
        tuple(ring.norm(sum(a_row[k] * B[k][j] for k in range(inner))) for j in range(cols))
        for a_row in A
    )


def mat_add(ring: Ring, A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(ring.add(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(ring: Ring, s: int, A: Matrix) -> Matrix:
    return tuple(tuple(ring.mul(s, a) for a in r) for r in A)


def transpose(A: Matrix, cols: int | None = None) -> Matrix:
    c = len(A[0]) if A else (cols or 0)
    return tuple(tuple(A[i][j] for i in range(len(A))) for j in range(c))


def pow_seq(ring: Ring, A: Matrix, k: int) -> list[Matrix]:
    """[I, A, A^2, ..., A^k] by repeated multiplication."""
    powers = [identity(len(A))]
    for _ in range(k):
        powers.append(mat_mul(ring, powers[-1], A))
    return powers


def is_identity(A: Matrix) -> bool:
    return A == identity(len(A))


def is_zero(A: Matrix) -> bool:
    return all(v == 0 for r in A for v in r)
