"""The base vocabulary: coding functions, parity, and matrix powering.

Every symbol here has a Python implementation taken from
:mod:`lapinterp.bitstring`, :mod:`lapinterp.zint` and :mod:`lapinterp.zmatrix`.
Most also carry a defining formula written over earlier symbols, so the
registry spot checks tie the fast implementations to the logical definitions.

The binary-integer operations ``addz``, ``mulz`` and ``SumZ`` and the counting
function ``numones`` have no defining formula; they are checked against
Python's integers in the test suite instead.
"""

from __future__ import annotations

import random

from ..bitstring import BitString, left, pair, right, row, row2, seq, unpair
from ..zint import add_z, encode_int, flip_sign, mul_z, sum_z, value_equal
from ..zmatrix import (
    g_string,
    id_mat,
    id_matz,
    par,
    parity_string,
    pow_seq2,
    pow_seq_z,
    prod2,
    prod_z,
)
from .registry import Registry

# -- helpers shared with the interpretation layer --------------------------------


def restrict2(n: int, X: BitString) -> BitString:
    """Keep only the entry bits (i, j) with i, j < n."""
    return BitString.from_positions(
        p for p in X.positions() if (u := unpair(p))[0] and u[1] < n and u[2] < n
    )


def restrictz(n: int, X: BitString) -> BitString:
    """Keep only the cell bits (i, (j, k)) with i, j < n."""
    keep = []
    for p in X.positions():
        ok, i, rest = unpair(p)
        if not ok or i >= n:
            continue
        ok2, j, _ = unpair(rest)
        if ok2 and j < n:
            keep.append(p)
    return BitString.from_positions(keep)


def monus(x: int, y: int) -> int:
    return x - y if x >= y else 0


def fdiv(x: int, y: int) -> int:
    return x // y if y else 0


def frem(x: int, y: int) -> int:
    return x % y if y else x


def g_z(n: int, i: int, j: int, X: BitString, Y: BitString) -> BitString:
    """The list of products X[i][t] * Y[t][j] for t < n."""
    bits = []
    for t in range(n):
        for k in mul_z(row2(i, t, X), row2(t, j, Y)).positions():
            bits.append(pair(t, k))
    return BitString.from_positions(bits)


# -- random argument generators for the spot checks -----------------------------


def _rand_str(rng: random.Random, width: int = 24) -> BitString:
    return BitString(rng.getrandbits(rng.randint(0, width)))


def _rand_mat2(rng: random.Random, n: int) -> BitString:
    return BitString.from_positions(
        pair(i, j) for i in range(n) for j in range(n) if rng.random() < 0.5
    )


def _rand_matz(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> BitString:
    bits = []
    for i in range(n):
        for j in range(n):
            bits.extend(pair(i, pair(j, k)) for k in encode_int(rng.randint(lo, hi)).positions())
    return BitString.from_positions(bits)


def _rand_list(rng: random.Random, length: int) -> BitString:
    bits = []
    for i in range(length):
        bits.extend(pair(i, k) for k in _rand_str(rng, 8).positions())
    return BitString.from_positions(bits)


def _rand_int_list(rng: random.Random, length: int) -> BitString:
    bits = []
    for i in range(length):
        bits.extend(pair(i, k) for k in encode_int(rng.randint(-20, 20)).positions())
    return BitString.from_positions(bits)


def _with_junk(rng: random.Random, X: BitString) -> BitString:
    """Sometimes add a bit outside the matrix area, to exercise restriction."""
    if rng.random() < 0.3:
        return X.with_bit(rng.randint(0, len(X) + 10))
    return X


# -- the vocabulary ----------------------------------------------------------------


def base_registry() -> Registry:
    r = Registry()

    def samp_pair(rng):
        if rng.random() < 0.5:
            return (pair(rng.randint(0, 9), rng.randint(0, 9)),)
        return (rng.randint(0, 120),)

    r.define(
        "pair", "num", ("x", "y"), pair,
        "(= v (+ (* (+ x y) (+ (+ x y) 1)) (* 2 y)))",
    )
    r.define(
        "Pair", "pred", ("p",), lambda p: unpair(p)[0],
        "(exists (x <= p) (exists (y <= p) (= p (pair x y))))",
        sample=samp_pair,
    )
    r.define(
        "left", "num", ("p",), left,
        "(or (exists (y <= p) (= p (pair v y))) (and (not (Pair p)) (= v 0)))",
        sample=samp_pair,
    )
    r.define(
        "right", "num", ("p",), right,
        "(or (exists (x <= p) (= p (pair x v))) (and (not (Pair p)) (= v 0)))",
        sample=samp_pair,
    )
    r.define(
        "Row", "str", ("x", "Z"), row,
        "(and (< b (len Z)) (in Z (pair x b)))",
        sample=lambda rng: (rng.randint(0, 4), _rand_list(rng, rng.randint(0, 5))),
    )
    r.define(
        "Row2", "str", ("x", "y", "Z"), row2,
        "(and (< b (len Z)) (in (Row x Z) (pair y b)))",
        sample=lambda rng: (rng.randint(0, 2), rng.randint(0, 2), _rand_matz(rng, 3)),
    )
    r.define(
        "seq", "num", ("x", "Z"), seq,
        """(or (and (< v (len Z)) (in Z (pair x v)) (forall (u < v) (not (in Z (pair x u)))))
               (and (forall (u < (len Z)) (not (in Z (pair x u)))) (= v (len Z))))""",
        sample=lambda rng: (rng.randint(0, 3), _rand_list(rng, rng.randint(0, 4))),
    )
    r.define(
        "entry", "num", ("i", "j", "Z"), lambda i, j, Z: seq(j, row(i, Z)),
        "(= v (seq j (Row i Z)))",
        sample=lambda rng: (rng.randint(0, 2), rng.randint(0, 2), _rand_matz(rng, 3)),
    )
    r.define(
        "monus", "num", ("x", "y"), monus,
        "(or (= x (+ y v)) (and (= v 0) (< x y)))",
    )
    r.define(
        "fdiv", "num", ("x", "y"), fdiv,
        "(or (and (<= (* y v) x) (< x (* y (+ v 1)))) (and (= y 0) (= v 0)))",
    )
    r.define(
        "frem", "num", ("x", "y"), frem,
        "(= (+ v (* y (fdiv x y))) x)",
    )
    r.define(
        "max", "num", ("x", "y"), max,
        "(or (and (<= x y) (= v y)) (and (< y x) (= v x)))",
    )
    r.define(
        "numones", "num", ("X",), lambda X: X.popcount(),
        note="counting semantics only; no defining formula",
    )

    # parity and Z2 matrix arithmetic
    r.define(
        "ID", "str", ("n",), id_mat,
        "(and (< b (pair n n)) (Pair b) (= (left b) (right b)))",
        sample=lambda rng: (rng.randint(0, 5),),
    )
    r.define(
        "G", "str", ("n", "i", "j", "X", "Y"), g_string,
        "(and (< b n) (in X (pair i b)) (in Y (pair b j)))",
        sample=lambda rng: (
            4, rng.randint(0, 3), rng.randint(0, 3), _rand_mat2(rng, 4), _rand_mat2(rng, 4)
        ),
    )
    r.define(
        "Parity", "str", ("x", "Y"), parity_string,
        """(and (not (in Out 0))
                (forall (z < x) (<-> (in Out (+ z 1)) (xor (in Out z) (in Y z))))
                (forall (z < (len Out)) (-> (in Out z) (<= z x))))""",
        style="graph",
        sample=lambda rng: (rng.randint(0, 20), _rand_str(rng, 20)),
    )
    r.define(
        "PAR", "pred", ("X",), par,
        "(in (Parity (len X) X) (len X))",
        sample=lambda rng: (_rand_str(rng, 30),),
    )

    def prod2_impl(n, X, Y):
        return prod2(n, restrict2(n, X), restrict2(n, Y))

    r.define(
        "Prod2", "str", ("n", "X", "Y"), prod2_impl,
        """(and (< b (pair n n)) (Pair b) (< (left b) n) (< (right b) n)
                (PAR (G n (left b) (right b) X Y)))""",
        sample=lambda rng: (
            (n := rng.randint(0, 4)),
            _with_junk(rng, _rand_mat2(rng, n)),
            _rand_mat2(rng, n),
        ),
    )

    def powseq2_impl(n, k, X):
        return pow_seq2(n, k, restrict2(n, X))

    # The junk-bit clause bounds the list slot by k, so that Y is unique.
    r.define(
        "PowSeq2", "str", ("n", "k", "X"), powseq2_impl,
        """(and (=2 (Row 0 Out) (ID n))
                (forall (i < k) (=2 (Row (+ i 1) Out) (Prod2 n X (Row i Out))))
                (forall (b < (len Out)) (-> (in Out b) (and (Pair b) (<= (left b) k)))))""",
        style="graph",
        sample=lambda rng: (
            (n := rng.randint(0, 3)), rng.randint(0, 4), _with_junk(rng, _rand_mat2(rng, n))
        ),
    )
    r.define(
        "Pow2", "str", ("n", "k", "X"), lambda n, k, X: row(k, powseq2_impl(n, k, X)),
        "(in (Row k (PowSeq2 n k X)) b)",
        sample=lambda rng: ((n := rng.randint(0, 3)), rng.randint(0, 5), _rand_mat2(rng, n)),
    )

    # binary integers
    r.define(
        "intsize", "str", ("X",), lambda X: BitString(X.mask >> 1),
        "(in X (+ b 1))",
    )
    r.define(
        "negz", "str", ("X",), flip_sign,
        "(or (and (= b 0) (not (in X 0))) (and (< 0 b) (in X b)))",
    )
    r.define("addz", "str", ("X", "Y"), add_z, note="checked against integer arithmetic")
    r.define("mulz", "str", ("X", "Y"), mul_z, note="checked against integer arithmetic")
    r.define(
        "SumZ", "str", ("n", "X"), lambda n, X: sum_z(n, X),
        note="positives and negatives summed apart, then subtracted",
    )
    r.define("Empty", "str", (), lambda: BitString(), "false")
    r.define("OneZ", "str", (), lambda: encode_int(1), "(= b 1)")
    r.define(
        "eqz", "pred", ("X", "Y"), value_equal,
        """(and (forall (t < (+ (len X) (len Y))) (<-> (in X (+ t 1)) (in Y (+ t 1))))
                (or (<-> (in X 0) (in Y 0))
                    (forall (t < (+ (len X) (len Y))) (not (in X (+ t 1))))))""",
        sample=lambda rng: _eqz_sample(rng),
    )

    # integer matrices
    r.define(
        "IDZ", "str", ("n",), id_matz,
        """(and (Pair b) (Pair (right b)) (< (left b) n)
                (= (left b) (left (right b))) (= (right (right b)) 1))""",
        sample=lambda rng: (rng.randint(0, 4),),
    )
    r.define(
        "GZ", "str", ("n", "i", "j", "X", "Y"), g_z,
        """(and (Pair b) (< (left b) n)
                (in (mulz (Row2 i (left b) X) (Row2 (left b) j Y)) (right b)))""",
        sample=lambda rng: (
            3, rng.randint(0, 2), rng.randint(0, 2), _rand_matz(rng, 3), _rand_matz(rng, 3)
        ),
    )

    def prodz_impl(n, X, Y):
        return prod_z(n, restrictz(n, X), restrictz(n, Y))

    r.define(
        "ProdZ", "str", ("n", "X", "Y"), prodz_impl,
        """(and (Pair b) (Pair (right b)) (< (left b) n) (< (left (right b)) n)
                (in (SumZ n (GZ n (left b) (left (right b)) X Y)) (right (right b))))""",
        sample=lambda rng: (
            (n := rng.randint(0, 3)), _with_junk(rng, _rand_matz(rng, n)), _rand_matz(rng, n)
        ),
    )

    def powseqz_impl(n, k, X):
        return pow_seq_z(n, k, restrictz(n, X))

    r.define(
        "PowSeqZ", "str", ("n", "k", "X"), powseqz_impl,
        """(and (=2 (Row 0 Out) (IDZ n))
                (forall (i < k) (=2 (Row (+ i 1) Out) (ProdZ n X (Row i Out))))
                (forall (b < (len Out)) (-> (in Out b) (and (Pair b) (<= (left b) k)))))""",
        style="graph",
        sample=lambda rng: (
            (n := rng.randint(0, 2)), rng.randint(0, 3), _rand_matz(rng, n, -2, 2)
        ),
    )
    r.define(
        "PowZ", "str", ("n", "k", "X"), lambda n, k, X: row(k, powseqz_impl(n, k, X)),
        "(in (Row k (PowSeqZ n k X)) b)",
        sample=lambda rng: (
            (n := rng.randint(0, 3)), rng.randint(0, 4), _rand_matz(rng, n, -3, 3)
        ),
    )
    return r


def _eqz_sample(rng: random.Random) -> tuple:
    a = rng.randint(-6, 6)
    b = a if rng.random() < 0.5 else rng.randint(-6, 6)
    X, Y = encode_int(a), encode_int(b)
    if a == 0 and rng.random() < 0.5:
        X = X.with_bit(0)  # a foreign -0
    return X, Y


BASE = base_registry().freeze()
