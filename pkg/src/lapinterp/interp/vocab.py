"""Functions the translations add on top of the base vocabulary.

A *wrapped* matrix is a string with one header bit at ``<0, <r, c>>`` and
1-indexed entries.  Over Z2 entry ``(i, j)`` is the single bit ``<i, j>``;
over Z it is the binary integer stored at the bits ``<i, <j, k>>``.  Strings
that are not well-formed wrapped matrices stand for the empty 0 x 0 matrix:
their dimension functions return 0 and they have no entries.

The Python implementations below are the ones the evaluator runs.  Each
symbol (except where noted) also has a defining formula, so
:func:`lapinterp.twosorted.spot_check` can compare the two.
"""

from __future__ import annotations

import random
from functools import lru_cache

from ..bitstring import BitString, pair, unpair
from ..twosorted.registry import Registry
from ..twosorted.vocab import base_registry, restrict2, restrictz
from ..zint import encode_int, sum_z
from ..zmatrix import id_mat, id_matz, pow2, pow_z

# -- header and shape checks -----------------------------------------------------------


def _header(X: BitString):
    """(r, c) from the unique row-0 bit, or None when there is not exactly one."""
    found = None
    for p in X.positions():
        ok, i, rest = unpair(p)
        if ok and i == 0:
            if found is not None:
                return None
            found = rest
    if found is None:
        return None
    ok, r, c = unpair(found)
    return (r, c) if ok else None


@lru_cache(maxsize=1 << 14)
def shape2(X: BitString):
    """Dimensions of a well-formed Z2 wrapped matrix, else None."""
    dims = _header(X)
    if dims is None:
        return None
    r, c = dims
    for p in X.positions():
        ok, i, j = unpair(p)
        if not ok:
            return None
        if i and not (1 <= i <= r and 1 <= j <= c):
            return None
    return dims


@lru_cache(maxsize=1 << 14)
def shapez(X: BitString):
    """Dimensions of a well-formed Z wrapped matrix, else None."""
    dims = _header(X)
    if dims is None:
        return None
    r, c = dims
    for p in X.positions():
        ok, i, rest = unpair(p)
        if not ok:
            return None
        if i == 0:
            continue
        ok, j, _ = unpair(rest)
        if not (ok and 1 <= i <= r and 1 <= j <= c):
            return None
    return dims


def is_matrix2(X: BitString) -> bool:
    return shape2(X) is not None


def is_matrixz(X: BitString) -> bool:
    return shapez(X) is not None


# -- wrapping ------------------------------------------------------------------------


def wrap2(r: int, c: int, Y: BitString) -> BitString:
    """Header for r x c plus the bits of the 0-indexed Y inside the r x c window."""
    bits = [pair(0, pair(r, c))]
    for p in Y.positions():
        ok, i, j = unpair(p)
        if ok and i < r and j < c:
            bits.append(pair(i + 1, j + 1))
    return BitString.from_positions(bits)


def strip2(X: BitString) -> BitString:
    out = []
    for p in X.positions():
        ok, i, j = unpair(p)
        if ok and i and j:
            out.append(pair(i - 1, j - 1))
    return BitString.from_positions(out)


def wrapz(r: int, c: int, Y: BitString) -> BitString:
    bits = [pair(0, pair(r, c))]
    for p in Y.positions():
        ok, i, rest = unpair(p)
        if not ok or i >= r:
            continue
        ok, j, k = unpair(rest)
        if ok and j < c:
            bits.append(pair(i + 1, pair(j + 1, k)))
    return BitString.from_positions(bits)


def stripz(X: BitString) -> BitString:
    out = []
    for p in X.positions():
        ok, i, rest = unpair(p)
        if not ok or not i:
            continue
        ok, j, k = unpair(rest)
        if ok and j:
            out.append(pair(i - 1, pair(j - 1, k)))
    return BitString.from_positions(out)


def rows2(X: BitString) -> int:
    s = shape2(X)
    return s[0] if s else 0


def cols2(X: BitString) -> int:
    s = shape2(X)
    return s[1] if s else 0


def rowsz(X: BitString) -> int:
    s = shapez(X)
    return s[0] if s else 0


def colsz(X: BitString) -> int:
    s = shapez(X)
    return s[1] if s else 0


# -- powering, entries, sums ----------------------------------------------------------------


def power2(k: int, X: BitString) -> BitString:
    r, c = shape2(X) or (0, 0)
    if k == 0:
        return wrap2(r, r, id_mat(r))
    n = max(r, c)
    return wrap2(r, c, pow2(n, k, restrict2(n, strip2(X))))


def powerz(k: int, X: BitString) -> BitString:
    r, c = shapez(X) or (0, 0)
    if k == 0:
        return wrapz(r, r, id_matz(r))
    n = max(r, c)
    return wrapz(r, c, pow_z(n, k, restrictz(n, stripz(X))))


def entryz(i: int, j: int, X: BitString) -> BitString:
    if not (i and j) or shapez(X) is None:
        return BitString()
    out = []
    for p in X.positions():
        ok, a, rest = unpair(p)
        if ok and a == i:
            ok, b, k = unpair(rest)
            if ok and b == j:
                out.append(k)
    return BitString.from_positions(out)


def linearize(X: BitString) -> BitString:
    """Cells of a Z wrapped matrix as a list in row-major order."""
    s = shapez(X)
    if s is None:
        return BitString()
    r, c = s
    out = []
    for p in X.positions():
        ok, i, rest = unpair(p)
        if ok and i:
            _, j, k = unpair(rest)
            out.append(pair((i - 1) * c + (j - 1), k))
    return BitString.from_positions(out)


def fsum(X: BitString) -> BitString:
    r, c = shapez(X) or (0, 0)
    return sum_z(r * c, linearize(X))


# -- samples -------------------------------------------------------------------------


def random_wrapped2(rng: random.Random, r: int | None = None, c: int | None = None) -> BitString:
    r = rng.randint(0, 3) if r is None else r
    c = rng.randint(0, 3) if c is None else c
    Y = BitString.from_positions(
        pair(i, j) for i in range(r) for j in range(c) if rng.random() < 0.5
    )
    return wrap2(r, c, Y)


def random_wrappedz(rng: random.Random, r: int | None = None, c: int | None = None, bound: int = 5) -> BitString:
    r = rng.randint(0, 3) if r is None else r
    c = rng.randint(0, 3) if c is None else c
    bits = []
    for i in range(r):
        for j in range(c):
            bits.extend(pair(i, pair(j, k)) for k in encode_int(rng.randint(-bound, bound)).positions())
    return wrapz(r, c, BitString.from_positions(bits))


def _maybe_broken(rng: random.Random, X: BitString) -> BitString:
    """Usually X; sometimes X with one extra bit (often making it ill-formed)."""
    roll = rng.random()
    if roll < 0.15:
        return X.with_bit(rng.randint(0, len(X) + 6))
    if roll < 0.25:
        return X.with_bit(pair(0, pair(rng.randint(0, 3), rng.randint(0, 3))))
    return X


def _s2(rng):
    return (_maybe_broken(rng, random_wrapped2(rng)),)


def _sz(rng):
    return (_maybe_broken(rng, random_wrappedz(rng)),)


def _raw2(rng):
    n = rng.randint(0, 4)
    return BitString.from_positions(
        pair(rng.randint(0, n), rng.randint(0, n)) for _ in range(rng.randint(0, 6))
    )


def _rawz(rng):
    bits = []
    for _ in range(rng.randint(0, 4)):
        i, j = rng.randint(0, 3), rng.randint(0, 3)
        bits.extend(pair(i, pair(j, k)) for k in encode_int(rng.randint(-5, 5)).positions())
    return BitString.from_positions(bits)


# -- the registry -----------------------------------------------------------------------


_IS_MATRIX2 = """
(exists (h < (len X)) (and (in X h) (Pair h) (= (left h) 0) (Pair (right h))
  (forall (t < (len X)) (-> (in X t)
    (and (Pair t)
         (or (= t h)
             (and (< 0 (left t)) (<= (left t) (left (right h)))
                  (< 0 (right t)) (<= (right t) (right (right h))))))))))
"""

_IS_MATRIXZ = """
(exists (h < (len X)) (and (in X h) (Pair h) (= (left h) 0) (Pair (right h))
  (forall (t < (len X)) (-> (in X t)
    (and (Pair t)
         (or (= t h)
             (and (< 0 (left t)) (<= (left t) (left (right h)))
                  (Pair (right t))
                  (< 0 (left (right t))) (<= (left (right t)) (right (right h))))))))))
"""


def _dim_graph(pred: str, side: str) -> str:
    return (
        f"(or (and ({pred} X) (= v ({side} (seq 0 X))))"
        f" (and (not ({pred} X)) (= v 0)))"
    )


def interp_registry() -> Registry:
    """The base vocabulary plus the wrapped-matrix functions."""
    r = base_registry()

    r.define("isMatrix2", "pred", ("X",), is_matrix2, _IS_MATRIX2, sample=_s2)
    r.define("isMatrixZ", "pred", ("X",), is_matrixz, _IS_MATRIXZ, sample=_sz)
    r.define("f_r", "num", ("X",), rows2, _dim_graph("isMatrix2", "left"), sample=_s2)
    r.define("f_c", "num", ("X",), cols2, _dim_graph("isMatrix2", "right"), sample=_s2)
    r.define("f_rz", "num", ("X",), rowsz, _dim_graph("isMatrixZ", "left"), sample=_sz)
    r.define("f_cz", "num", ("X",), colsz, _dim_graph("isMatrixZ", "right"), sample=_sz)

    r.define(
        "Strip", "str", ("X",), strip2,
        "(and (Pair b) (in X (pair (+ (left b) 1) (+ (right b) 1))))",
        sample=_s2,
    )
    r.define(
        "Wrap", "str", ("r", "c", "Y"), wrap2,
        """(or (= b (pair 0 (pair r c)))
               (and (Pair b) (< 0 (left b)) (<= (left b) r) (< 0 (right b)) (<= (right b) c)
                    (in Y (pair (monus (left b) 1) (monus (right b) 1)))))""",
        sample=lambda rng: (rng.randint(0, 3), rng.randint(0, 3), _raw2(rng)),
    )
    r.define(
        "StripZ", "str", ("X",), stripz,
        """(and (Pair b) (Pair (right b))
                (in X (pair (+ (left b) 1) (pair (+ (left (right b)) 1) (right (right b))))))""",
        sample=_sz,
    )
    r.define(
        "WrapZ", "str", ("r", "c", "Y"), wrapz,
        """(or (= b (pair 0 (pair r c)))
               (and (Pair b) (< 0 (left b)) (<= (left b) r)
                    (Pair (right b)) (< 0 (left (right b))) (<= (left (right b)) c)
                    (in Y (pair (monus (left b) 1)
                                (pair (monus (left (right b)) 1) (right (right b)))))))""",
        sample=lambda rng: (rng.randint(0, 3), rng.randint(0, 3), _rawz(rng)),
    )

    def sample_pow2(rng):
        return (rng.randint(0, 4), _maybe_broken(rng, random_wrapped2(rng)))

    def sample_powz(rng):
        return (rng.randint(0, 3), _maybe_broken(rng, random_wrappedz(rng, bound=3)))

    r.define(
        "Fp", "str", ("k", "X"), power2,
        """(or (and (= k 0) (in (Wrap (f_r X) (f_r X) (ID (f_r X))) b))
               (and (< 0 k)
                    (in (Wrap (f_r X) (f_c X) (Pow2 (max (f_r X) (f_c X)) k (Strip X))) b)))""",
        sample=sample_pow2,
    )
    r.define(
        "FpZ", "str", ("k", "X"), powerz,
        """(or (and (= k 0) (in (WrapZ (f_rz X) (f_rz X) (IDZ (f_rz X))) b))
               (and (< 0 k)
                    (in (WrapZ (f_rz X) (f_cz X) (PowZ (max (f_rz X) (f_cz X)) k (StripZ X))) b)))""",
        sample=sample_powz,
    )
    r.define(
        "Fe", "str", ("i", "j", "X"), entryz,
        "(and (isMatrixZ X) (< 0 i) (< 0 j) (in X (pair i (pair j b))))",
        sample=lambda rng: (rng.randint(0, 4), rng.randint(0, 4), _sz(rng)[0]),
    )
    r.define(
        "Linearize", "str", ("X",), linearize,
        """(and (isMatrixZ X) (Pair b) (< (left b) (* (f_rz X) (f_cz X)))
                (in X (pair (+ (fdiv (left b) (f_cz X)) 1)
                            (pair (+ (frem (left b) (f_cz X)) 1) (right b)))))""",
        sample=_sz,
    )
    r.define(
        "Fsum", "str", ("X",), fsum,
        "(in (SumZ (* (f_rz X) (f_cz X)) (Linearize X)) b)",
        sample=_sz,
    )
    return r


INTERP = interp_registry().freeze()

#: the symbols added by this module, in definition order
INTERP_SYMBOLS = (
    "isMatrix2", "isMatrixZ", "f_r", "f_c", "f_rz", "f_cz", "Strip", "Wrap",
    "StripZ", "WrapZ", "Fp", "FpZ", "Fe", "Linearize", "Fsum",
)
