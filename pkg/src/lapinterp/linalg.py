"""Determinant, characteristic polynomial and adjoint without division.

The characteristic polynomial is ``det(xI - A)``, listed from the highest
degree down, so it is monic.  It is computed by Berkowitz's method: split

    A = [[a, R], [S, M]]

with ``a`` a scalar, ``R`` a row, ``S`` a column and ``M`` the trailing
principal block.  The lower-triangular Toeplitz matrix with first column

    1, -a, -R S, -R M S, -R M^2 S, ...

maps the characteristic polynomial of ``M`` to that of ``A``.  Doing this for
every trailing block and multiplying the Toeplitz matrices together gives the
coefficient vector.  The powers of ``M`` come from :func:`lapinterp.ring.pow_seq`.

From ``p(x) = x^n + p_{n-1} x^{n-1} + ... + p_0``:

* ``det(A) = (-1)^n p_0``;
* ``adj(A) = (-1)^(n+1) (A^(n-1) + p_{n-1} A^(n-2) + ... + p_1 I)``, which is
  Cayley-Hamilton rearranged.

Two independent determinant oracles are provided for checking: cofactor
expansion along the first row and the sum over permutations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from .ring import (
    Matrix,
    Ring,
    as_matrix,
    identity,
    mat_add,
    mat_mul,
    mat_scale,
    pow_seq,
    ring_named,
    transpose,
    zeros,
)


def _ring(ring) -> Ring:
    return ring_named(ring) if isinstance(ring, str) else ring


def _square(A, ring: Ring) -> Matrix:
    M = as_matrix(A, ring)
    if any(len(r) != len(M) for r in M):
        raise ValueError(f"expected a square matrix, got {len(M)} rows of lengths {sorted({len(r) for r in M})}")
    return M


# -- Berkowitz -----------------------------------------------------------------------


def _toeplitz_column(ring: Ring, A: Matrix) -> list[int]:
    """First column of the Toeplitz factor for the split of A at its first row."""
    n = len(A)
    a = A[0][0]
    R = A[0][1:]
    S = [A[i][0] for i in range(1, n)]
    M = tuple(r[1:] for r in A[1:])
    col = [1, ring.neg(a)]
    for P in pow_seq(ring, M, n - 2)[: n - 1]:
        PS = [sum(P[i][k] * S[k] for k in range(n - 1)) for i in range(n - 1)]
        col.append(ring.neg(ring.norm(sum(R[i] * PS[i] for i in range(n - 1)))))
    return col  # length n + 1


def char_poly(A, ring="z") -> list[int]:
    """Coefficients of det(xI - A), highest degree first; ``[1]`` for 0 x 0."""
    ring = _ring(ring)
    A = _square(A, ring)
    n = len(A)
    vec = [1]  # char poly of the empty trailing block
    for k in range(n - 1, -1, -1):
        block = tuple(r[k:] for r in A[k:])
        col = _toeplitz_column(ring, block)
        # (size+2) x (size+1) lower-triangular Toeplitz times vec
        m = len(vec)
        vec = [
            ring.norm(sum(col[i - j] * vec[j] for j in range(min(i, m - 1) + 1) if i - j < len(col)))
            for i in range(m + 1)
        ]
    return vec


def det(A, ring="z") -> int:
    ring = _ring(ring)
    p = char_poly(A, ring)
    n = len(p) - 1
    return ring.norm(p[-1] if n % 2 == 0 else -p[-1])


def adjoint(A, ring="z", check: bool = False) -> Matrix:
    """The adjugate via the characteristic polynomial.

    With ``check=True`` the identity ``A adj(A) = det(A) I`` is asserted.
    """
    ring = _ring(ring)
    A = _square(A, ring)
    n = len(A)
    if n == 0:
        return ()
    p = char_poly(A, ring)
    powers = pow_seq(ring, A, n - 1)
    acc = zeros(n, n)
    # A^(n-1) p[0] + A^(n-2) p[1] + ... + I p[n-1]
    for k in range(n):
        acc = mat_add(ring, acc, mat_scale(ring, p[k], powers[n - 1 - k]))
    out = acc if (n + 1) % 2 == 0 else mat_scale(ring, ring.neg(1), acc)
    if check:
        d = det(A, ring)
        if mat_mul(ring, A, out) != mat_scale(ring, d, identity(n)):
            raise AssertionError("A adj(A) != det(A) I")
    return out


# -- oracles ---------------------------------------------------------------------------


def det_cofactor(A, ring="z") -> int:
    """Cofactor expansion along the first row."""
    ring = _ring(ring)
    A = _square(A, ring)
    return _cofactor(ring, A)


def _cofactor(ring: Ring, A: Matrix) -> int:
    n = len(A)
    if n == 0:
        return 1
    total = 0
    for j in range(n):
        if A[0][j] == 0:
            continue
        minor = tuple(r[:j] + r[j + 1:] for r in A[1:])
        term = A[0][j] * _cofactor(ring, minor)
        total += -term if j % 2 else term
    return ring.norm(total)


def _sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


def det_permutation(A, ring="z") -> int:
    """The Leibniz sum over all permutations."""
    ring = _ring(ring)
    A = _square(A, ring)
    n = len(A)
    total = 0
    for perm in itertools.permutations(range(n)):
        prod = _sign(perm)
        for i, j in enumerate(perm):
            prod *= A[i][j]
            if not prod:
                break
        total += prod
    return ring.norm(total)


def char_poly_cofactor(A, ring="z") -> list[int]:
    """det(xI - A) by cofactor expansion over polynomial entries (an oracle)."""
    ring = _ring(ring)
    A = _square(A, ring)
    n = len(A)
    # polynomials as coefficient lists, lowest degree first
    P = [[[ring.neg(A[i][j])] + ([1] if i == j else []) for j in range(n)] for i in range(n)]
    low_first = _poly_det(ring, P)
    low_first += [0] * (n + 1 - len(low_first))
    return [ring.norm(c) for c in reversed(low_first[: n + 1])]


def _padd(ring, p, q):
    out = [0] * max(len(p), len(q))
    for i, v in enumerate(p):
        out[i] += v
    for i, v in enumerate(q):
        out[i] += v
    return [ring.norm(v) for v in out]


def _pmul(ring, p, q):
    out = [0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return [ring.norm(v) for v in out]


def _poly_det(ring: Ring, P) -> list[int]:
    n = len(P)
    if n == 0:
        return [1]
    total: list[int] = []
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in P[1:]]
        term = _pmul(ring, P[0][j], _poly_det(ring, minor))
        if j % 2:
            term = [ring.neg(v) for v in term]
        total = _padd(ring, total, term)
    return total


def adjoint_cofactor(A, ring="z") -> Matrix:
    """adj(A)[i][j] = (-1)^(i+j) det(A with row j and column i removed)."""
    ring = _ring(ring)
    A = _square(A, ring)
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(r[:i] + r[i + 1:] for k, r in enumerate(A) if k != j)
            v = _cofactor(ring, minor)
            row.append(ring.norm(-v if (i + j) % 2 else v))
        out.append(tuple(row))
    return tuple(out)


# -- Cayley-Hamilton ---------------------------------------------------------------------


def poly_at_matrix(coeffs: Sequence[int], A, ring="z") -> Matrix:
    """Sum of coeffs[k] * A^(n-k) for highest-degree-first coefficients."""
    ring = _ring(ring)
    A = _square(A, ring)
    n = len(coeffs) - 1
    powers = pow_seq(ring, A, n)
    acc = zeros(len(A), len(A))
    for k, c in enumerate(coeffs):
        acc = mat_add(ring, acc, mat_scale(ring, c, powers[n - k]))
    return acc


def check_cayley_hamilton(A, ring="z") -> bool:
    ring = _ring(ring)
    A = _square(A, ring)
    return all(v == 0 for r in poly_at_matrix(char_poly(A, ring), A, ring) for v in r)


# -- reports and random instances ----------------------------------------------------------


@dataclass
class Report:
    name: str
    ring: str
    trials: int = 0
    failures: list = field(default_factory=list)  # (description, matrices...)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, what: str, *data) -> None:
        self.failures.append((what, *data))

    def describe(self) -> str:
        if self.ok:
            return f"{self.name} over {self.ring}: {self.trials} trials, all hold"
        what, *data = self.failures[0]
        return f"{self.name} over {self.ring}: {len(self.failures)} failures; first: {what} {data}"


def random_matrix(rng: random.Random, ring: Ring, r: int, c: int | None = None, bound: int = 9) -> Matrix:
    c = r if c is None else c
    if ring.modulus == 2:
        return tuple(tuple(rng.randint(0, 1) for _ in range(c)) for _ in range(r))
    return tuple(tuple(rng.randint(-bound, bound) for _ in range(c)) for _ in range(r))


def _rows_replaced(A: Matrix, k: int, row) -> Matrix:
    return tuple(tuple(row) if i == k else r for i, r in enumerate(A))


def check_determinant_axioms(trials: int = 200, n_max: int = 4, ring="z", seed: int = 0) -> Report:
    """Multilinearity, alternation and det(I) = 1, for rows and for columns."""
    ring = _ring(ring)
    rng = random.Random(f"det-axioms/{ring.name}/{seed}")
    report = Report("determinant axioms", ring.name)
    for n in range(n_max + 1):
        report.trials += 1
        if det(identity(n), ring) != 1:
            report.fail("det(I) != 1", n)
    for _ in range(trials):
        n = rng.randint(1, n_max)
        A = random_matrix(rng, ring, n)
        k = rng.randrange(n)
        u, v = random_matrix(rng, ring, 1, n)[0], random_matrix(rng, ring, 1, n)[0]
        alpha, beta = random_matrix(rng, ring, 1, 2, bound=5)[0]
        for side, prep in (("row", lambda M: M), ("column", transpose)):
            report.trials += 1
            B = prep(A)
            mixed = [ring.norm(alpha * x + beta * y) for x, y in zip(u, v)]
            lhs = det(prep(_rows_replaced(B, k, mixed)), ring)
            rhs = ring.norm(
                alpha * det(prep(_rows_replaced(B, k, u)), ring)
                + beta * det(prep(_rows_replaced(B, k, v)), ring)
            )
            if lhs != rhs:
                report.fail(f"{side} linearity", A, k, u, v, alpha, beta)
            if n >= 2:
                i, j = rng.sample(range(n), 2)
                swapped = list(B)
                swapped[i], swapped[j] = swapped[j], swapped[i]
                if det(prep(tuple(swapped)), ring) != ring.neg(det(A, ring)):
                    report.fail(f"{side} swap", A, i, j)
                repeated = list(B)
                repeated[j] = repeated[i]
                if det(prep(tuple(repeated)), ring) != 0:
                    report.fail(f"repeated {side}", A, i, j)
    return report


def check_cofactor(trials: int = 200, n_max: int = 5, ring="z", seed: int = 0, n_min: int = 1) -> Report:
    """Berkowitz, cofactor expansion and the permutation sum agree.

    Sizes are drawn uniformly from ``n_min..n_max``; pass ``n_min=n_max`` for
    a fixed size.
    """
    ring = _ring(ring)
    rng = random.Random(f"cofactor/{ring.name}/{seed}")
    report = Report("cofactor expansion", ring.name)
    for _ in range(trials):
        n = rng.randint(n_min, n_max)
        A = random_matrix(rng, ring, n)
        report.trials += 1
        _compare_dets(report, A, ring)
    return report


def _compare_dets(report: Report, A: Matrix, ring: Ring) -> None:
    b, c, p = det(A, ring), det_cofactor(A, ring), det_permutation(A, ring)
    if not b == c == p:
        report.fail(f"berkowitz={b} cofactor={c} permutation={p}", A)


def exhaustive_agreement(n: int, ring="z2", values: Sequence[int] | None = None) -> Report:
    """Compare the three determinants on every n x n matrix over ``values``.

    ``values`` defaults to ``{0, 1}`` over Z2 and ``{-1, 0, 1}`` over Z.
    """
    ring = _ring(ring)
    if values is None:
        values = (0, 1) if ring.modulus == 2 else (-1, 0, 1)
    report = Report(f"exhaustive {n}x{n} agreement", ring.name)
    for flat in itertools.product(values, repeat=n * n):
        A = tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))
        report.trials += 1
        _compare_dets(report, A, ring)
    return report


# -- hard identities ----------------------------------------------------------------------


def inverse_gf2(A) -> Matrix | None:
    """Inverse over GF(2) by Gauss-Jordan elimination, or None when singular."""
    n = len(A)
    rows = [[v % 2 for v in r] + [int(i == j) for j in range(n)] for i, r in enumerate(A)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(n):
            if r != col and rows[r][col]:
                rows[r] = [x ^ y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(r[n:]) for r in rows)


def _elementary(rng: random.Random, n: int, bound: int = 3) -> tuple[Matrix, Matrix]:
    """A random elementary matrix over Z with its inverse."""
    kind = rng.choice(("add", "swap", "negate")) if n > 1 else "negate"
    E = [list(r) for r in identity(n)]
    F = [list(r) for r in identity(n)]
    if kind == "add":
        i, j = rng.sample(range(n), 2)
        c = rng.choice([v for v in range(-bound, bound + 1) if v])
        E[i][j], F[i][j] = c, -c
    elif kind == "swap":
        i, j = rng.sample(range(n), 2)
        E[i], E[j] = E[j], E[i]
        F = [r[:] for r in E]
    else:
        i = rng.randrange(n)
        E[i][i] = F[i][i] = -1
    return tuple(map(tuple, E)), tuple(map(tuple, F))


def invertible_pair(rng: random.Random, n: int, ring) -> tuple[Matrix, Matrix]:
    """A random A with its inverse B.

    Over Z2: a random matrix, resampled until it is invertible, inverted by
    elimination.  Over Z: a product of up to 3n elementary matrices, with the
    inverse factors multiplied in reverse order.
    """
    ring = _ring(ring)
    if ring.modulus == 2:
        while True:
            A = random_matrix(rng, ring, n)
            B = inverse_gf2(A)
            if B is not None:
                return A, B
    A, B = identity(n), identity(n)
    for _ in range(rng.randint(1, 3 * n)):
        E, F = _elementary(rng, n)
        A, B = mat_mul(ring, A, E), mat_mul(ring, F, B)
    return A, B


HARD_IDENTITIES = (
    "AB=I, AC=I -> B=C",
    "AB=I, AC=0 -> C=0",
    "AB=I -> BA=I",
    "AB=I -> At Bt=I",
)


def hard_identities(A, B, C, ring="z") -> dict[str, bool]:
    """Truth of each of the four implications at (A, B, C)."""
    ring = _ring(ring)
    n = len(A)
    I, O = identity(n), zeros(n, n)
    ab = mat_mul(ring, A, B) == I
    ac = mat_mul(ring, A, C)
    return {
        HARD_IDENTITIES[0]: not (ab and ac == I) or B == C,
        HARD_IDENTITIES[1]: not (ab and ac == O) or C == O,
        HARD_IDENTITIES[2]: not ab or mat_mul(ring, B, A) == I,
        HARD_IDENTITIES[3]: not ab or mat_mul(ring, transpose(A, n), transpose(B, n)) == I,
    }


def check_hard_identities(trials: int = 200, n_max: int = 4, ring="z", seed: int = 0) -> Report:
    """All four identities on constructed inverse pairs, plus vacuous cases.

    For each pair (A, B), C runs over an independently computed inverse (the
    adjugate scaled by det(A) over Z, elimination over Z2), the zero matrix
    and a random matrix.  Every third trial also draws a singular A, where
    no hypothesis can hold.
    """
    ring = _ring(ring)
    rng = random.Random(f"hard/{ring.name}/{seed}")
    report = Report("hard matrix identities", ring.name)
    for t in range(trials):
        n = rng.randint(1, n_max)
        A, B = invertible_pair(rng, n, ring)
        report.trials += 1
        if mat_mul(ring, A, B) != identity(n):
            report.fail("constructed pair is not inverse", A, B)
            continue
        if ring.modulus == 2:
            other = inverse_gf2(A)
        else:
            other = mat_scale(ring, det(A, ring), adjoint(A, ring))
        for C in (other, zeros(n, n), random_matrix(rng, ring, n)):
            for name, holds in hard_identities(A, B, C, ring).items():
                if not holds:
                    report.fail(name, A, B, C)
        if t % 3 == 0 and n >= 2:
            S = list(random_matrix(rng, ring, n))
            S[-1] = S[0]  # a repeated row makes A singular
            S = tuple(S)
            X = random_matrix(rng, ring, n)
            if mat_mul(ring, S, X) == identity(n):
                report.fail("singular matrix has a right inverse", S, X)
            for name, holds in hard_identities(S, X, X, ring).items():
                if not holds:
                    report.fail(name + " (singular)", S, X)
    return report


def check_cayley_hamilton_random(trials: int = 1000, n_max: int = 5, ring="z", seed: int = 0) -> Report:
    ring = _ring(ring)
    rng = random.Random(f"cayley-hamilton/{ring.name}/{seed}")
    report = Report("Cayley-Hamilton", ring.name)
    for _ in range(trials):
        A = random_matrix(rng, ring, rng.randint(0, n_max))
        report.trials += 1
        if not check_cayley_hamilton(A, ring):
            report.fail("p_A(A) != 0", A)
    return report


def check_multiplicativity(trials: int = 200, n_max: int = 4, ring="z", seed: int = 0) -> Report:
    ring = _ring(ring)
    rng = random.Random(f"multiplicative/{ring.name}/{seed}")
    report = Report("det(AB) = det(A) det(B)", ring.name)
    for _ in range(trials):
        n = rng.randint(0, n_max)
        A, B = random_matrix(rng, ring, n), random_matrix(rng, ring, n)
        report.trials += 1
        if det(mat_mul(ring, A, B), ring) != ring.mul(det(A, ring), det(B, ring)):
            report.fail("det(AB) != det(A) det(B)", A, B)
    return report
