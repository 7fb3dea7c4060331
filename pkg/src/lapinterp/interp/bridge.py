"""Move values between the LAp standard model and wrapped bit strings."""

from __future__ import annotations

from ..bitstring import BitString, pair
from ..lap.evaluator import MatVal
from ..zint import encode_int, value
from .translator import TranslationContext, field_carrier, formula_carrier
from .vocab import entryz, shape2, shapez, wrap2, wrapz


def wrap_matrix2(M: MatVal) -> BitString:
    bits = [pair(i, j) for i in range(M.rows) for j in range(M.cols) if M.data[i][j] % 2]
    return wrap2(M.rows, M.cols, BitString.from_positions(bits))


def wrap_matrixz(M: MatVal) -> BitString:
    bits = []
    for i in range(M.rows):
        for j in range(M.cols):
            bits.extend(pair(i, pair(j, k)) for k in encode_int(M.data[i][j]).positions())
    return wrapz(M.rows, M.cols, BitString.from_positions(bits))


def unwrap_matrix2(X: BitString) -> MatVal:
    """The matrix a Z2 string denotes (0 x 0 when it is not well formed)."""
    r, c = shape2(X) or (0, 0)
    return MatVal(r, c, tuple(tuple(int(X[pair(i, j)]) for j in range(1, c + 1)) for i in range(1, r + 1)))


def unwrap_matrixz(X: BitString) -> MatVal:
    r, c = shapez(X) or (0, 0)
    return MatVal(r, c, tuple(tuple(value(entryz(i, j, X)) for j in range(1, c + 1)) for i in range(1, r + 1)))


def field_carrier2(v: int) -> BitString:
    """A 1 x 1 wrapped matrix whose only entry is the Z2 value ``v``."""
    return wrap2(1, 1, BitString.from_positions([pair(0, 0)] if v % 2 else []))


def encode_env(env: dict, sorts: dict, target: str) -> dict:
    """Translate an LAp environment for the variables in ``sorts``.

    ``sorts`` maps LAp names to ``index``, ``field``, ``matrix`` or
    ``formula``; the result uses the variable names chosen by the translation.
    """
    z2 = target == "z2"
    out = {}
    for name, sort in sorts.items():
        if name not in env:
            continue
        v = env[name]
        if sort == "index":
            out[name] = v
        elif sort == "field":
            out[field_carrier(name)] = field_carrier2(v) if z2 else encode_int(v)
        elif sort == "matrix":
            out[name] = wrap_matrix2(v) if z2 else wrap_matrixz(v)
        else:
            out[formula_carrier(name)] = BitString(1 if v else 0)
    return out


def encode_for(env: dict, ctx: TranslationContext) -> dict:
    """Like :func:`encode_env`, with the sorts read off a used context."""
    sorts = {}
    for name in ctx.index_vars:
        sorts[name] = "index"
    for name in ctx.field_vars:
        sorts[name] = "field"
    for name in ctx.matrix_vars:
        sorts[name] = "matrix"
    for name in ctx.formula_vars:
        sorts[name] = "formula"
    return encode_env(env, sorts, ctx.target)
