"""Standard-model evaluation of LAp over Z2 or Z.

Index terms evaluate to naturals, field terms to ring elements (normalized
ints), matrix terms to :class:`MatVal`.  Out-of-range entries read as zero.
Derived operators are evaluated through their lambda-term expansions.

Conventions fixed here:

* ``div(i, 0) = 0`` and ``rem(i, 0) = i``, so ``i = j*div(i,j) + rem(i,j)``
  holds even at ``j = 0``;
* over Z2 the inverse is the identity map (so ``inv(0) = 0``), over Z it is
  an error;
* ``p(0, A)`` is the identity of size ``r(A)``.  For ``n >= 1``, ``p(n, A)``
  pads ``A`` with zeros to a square of side ``max(r, c)``, raises it to the
  ``n``-th power and keeps the top-left ``r x c`` window.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..ring import Ring, ring_named
from .ast import (
    And,
    App,
    Cond,
    Const,
    DERIVED_OPS,
    FormulaVar,
    Lam,
    Not,
    Or,
    Rel,
    Sequent,
    Var,
    formula_vars,
    free_vars,
)
from .derived import expand


class LapEvalError(ValueError):
    pass


@dataclass(frozen=True)
class MatVal:
    """An r x c matrix with ring entries; equal iff shapes and entries agree."""

    rows: int
    cols: int
    data: tuple  # tuple of row tuples

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]], ring: Ring | None = None, cols: int | None = None):
        data = tuple(tuple(ring.norm(v) if ring else v for v in r) for r in rows)
        c = cols if cols is not None else (len(data[0]) if data else 0)
        if any(len(r) != c for r in data):
            raise ValueError("ragged matrix")
        return cls(len(data), c, data)

    @classmethod
    def zeros(cls, r: int, c: int) -> "MatVal":
        return cls(r, c, tuple((0,) * c for _ in range(r)))

    @classmethod
    def identity(cls, n: int) -> "MatVal":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int) -> int:
        """1-indexed read; zero outside the matrix."""
        if 1 <= i <= self.rows and 1 <= j <= self.cols:
            return self.data[i - 1][j - 1]
        return 0

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.data]

    def __str__(self) -> str:
        return f"{self.rows}x{self.cols} {self.tolist()}"


def _mul_square(ring: Ring, X: tuple, Y: tuple) -> tuple:
    n = len(X)
    cols = list(zip(*Y)) if n else []
    return tuple(tuple(ring.norm(sum(a * b for a, b in zip(row, col))) for col in cols) for row in X)


def power(ring: Ring, A: MatVal, n: int) -> MatVal:
    if n == 0:
        return MatVal.identity(A.rows)
    m = max(A.rows, A.cols)
    P = tuple(tuple(A.entry(i, j) for j in range(1, m + 1)) for i in range(1, m + 1))
    result = None
    base = P
    k = n
    while k:
        if k & 1:
            result = base if result is None else _mul_square(ring, result, base)
        k >>= 1
        if k:
            base = _mul_square(ring, base, base)
    return MatVal(A.rows, A.cols, tuple(tuple(result[i][j] for j in range(A.cols)) for i in range(A.rows)))


class LapEvaluator:
    """Evaluate LAp syntax in the standard model over ``ring``.

    Environments map variable names to values and formula-variable names to
    booleans.
    """

    def __init__(self, ring: Ring | str, memo: bool = True):
        self.ring = ring_named(ring) if isinstance(ring, str) else ring
        self.memo = memo
        self._expansions: dict[int, tuple] = {}
        self._names: dict[int, tuple] = {}
        self._values: dict = {}

    # public entry points
    def term(self, t, env: dict):
        self._values.clear()
        return self._term(t, dict(env))

    def formula(self, phi, env: dict) -> bool:
        self._values.clear()
        return self._formula(phi, dict(env))

    def sequent(self, s: Sequent, env: dict) -> bool:
        self._values.clear()
        env = dict(env)
        return not all(self._formula(f, env) for f in s.ante) or any(
            self._formula(f, env) for f in s.succ
        )

    def evaluate(self, node, env: dict):
        if isinstance(node, Sequent):
            return self.sequent(node, env)
        if isinstance(node, (Rel, Not, And, Or, FormulaVar)):
            return self.formula(node, env)
        return self.term(node, env)

    # internals
    def _expanded(self, t: App):
        hit = self._expansions.get(id(t))
        if hit is not None and hit[0] is t:
            return hit[1]
        out = expand(t)
        self._expansions[id(t)] = (t, out)
        return out

    def _key_names(self, t) -> tuple:
        hit = self._names.get(id(t))
        if hit is not None and hit[0] is t:
            return hit[1]
        names = tuple(sorted(free_vars(t) | formula_vars(t)))
        self._names[id(t)] = (t, names)
        return names

    def _term(self, t, env):
        # Matrix values (and sums over them) are cached on the values of their
        # free variables: a product evaluates its factors once per entry
        # otherwise, which is exponential in the nesting depth.
        if self.memo and (t.sort == "matrix" or (isinstance(t, App) and t.op in _SUMS)) and not isinstance(t, Var):
            key = (id(t),) + tuple(env.get(n) for n in self._key_names(t))
            try:
                return self._values[key][1]
            except KeyError:
                out = self._term_raw(t, env)
                self._values[key] = (t, out)
                return out
        return self._term_raw(t, env)

    def _term_raw(self, t, env):  # noqa: C901 -- one branch per operator
        ring = self.ring
        if isinstance(t, Var):
            try:
                return env[t.name]
            except KeyError:
                raise LapEvalError(f"no value for variable {t.name!r}") from None
        if isinstance(t, Const):
            return t.value
        if isinstance(t, Cond):
            return self._term(t.then if self._formula(t.cond, env) else t.other, env)
        if isinstance(t, Lam):
            return self._lam(t, env)
        if not isinstance(t, App):
            raise LapEvalError(f"not a term: {t!r}")
        op = t.op
        if op in DERIVED_OPS:
            return self._term(self._expanded(t), env)
        args = t.args
        if t.sort == "index":
            if op in ("r", "c"):
                M = self._term(args[0], env)
                return M.rows if op == "r" else M.cols
            a, b = self._term(args[0], env), self._term(args[1], env)
            if op == "+":
                return a + b
            if op == "*":
                return a * b
            if op == "-":
                return a - b if a > b else 0
            if op == "div":
                return a // b if b else 0
            if op == "rem":
                return a % b if b else a
        elif t.sort == "field":
            if op == "e":
                M = self._term(args[0], env)
                return M.entry(self._term(args[1], env), self._term(args[2], env))
            if op == "Sigma":
                M = self._term(args[0], env)
                return ring.norm(sum(sum(r) for r in M.data))
            if op == "neg":
                return ring.neg(self._term(args[0], env))
            if op == "inv":
                v = self._term(args[0], env)
                try:
                    return ring.inv(v)
                except ArithmeticError as err:
                    raise LapEvalError(str(err)) from None
            a, b = self._term(args[0], env), self._term(args[1], env)
            if op == "+":
                return ring.add(a, b)
            if op == "*":
                return ring.mul(a, b)
            if op == "-":
                return ring.sub(a, b)
        elif op == "p":
            n = self._term(args[0], env)
            return power(ring, self._term(args[1], env), n)
        raise LapEvalError(f"unknown operator {op!r} of sort {t.sort}")

    def _lam(self, t: Lam, env):
        m, n = self._term(t.rows, env), self._term(t.cols, env)
        si, sj = env.get(t.i, _MISSING), env.get(t.j, _MISSING)
        rows = []
        try:
            for i in range(1, m + 1):
                env[t.i] = i
                row = []
                for j in range(1, n + 1):
                    env[t.j] = j
                    row.append(self.ring.norm(self._term(t.body, env)))
                rows.append(tuple(row))
        finally:
            _restore(env, t.i, si)
            _restore(env, t.j, sj)
        return MatVal(m, n, tuple(rows))

    def _formula(self, phi, env) -> bool:
        if isinstance(phi, Rel):
            a, b = self._term(phi.left, env), self._term(phi.right, env)
            return a == b if phi.op == "=" else a <= b
        if isinstance(phi, Not):
            return not self._formula(phi.arg, env)
        if isinstance(phi, And):
            return self._formula(phi.left, env) and self._formula(phi.right, env)
        if isinstance(phi, Or):
            return self._formula(phi.left, env) or self._formula(phi.right, env)
        if isinstance(phi, FormulaVar):
            try:
                return bool(env[phi.name])
            except KeyError:
                raise LapEvalError(f"no truth value for formula variable {phi.name!r}") from None
        raise LapEvalError(f"not a formula: {phi!r}")


_MISSING = object()
_SUMS = frozenset({"Sigma", "dot", "trace"})


def _restore(env: dict, name: str, saved) -> None:
    if saved is _MISSING:
        env.pop(name, None)
    else:
        env[name] = saved


def eval_term(t, env: dict, ring: Ring | str):
    return LapEvaluator(ring).term(t, env)


def eval_derived(name: str, args: Sequence, env: dict, ring: Ring | str):
    """Evaluate ``name(args...)`` for a derived operator (through its expansion)."""
    from .ast import SIGNATURES

    sort = next((s for (op, s) in SIGNATURES if op == name), None)
    if name not in DERIVED_OPS or sort is None:
        raise LapEvalError(f"{name!r} is not a derived operator")
    return LapEvaluator(ring).term(App(name, tuple(args), sort), env)
