"""Standard-model evaluation of two-sorted formulas.

Trees are compiled once into nested Python closures that read an environment
dict (number variables to ``int``, string variables to :class:`BitString`).
Quantifiers and builders bind their variable in that dict and restore the
previous value afterwards.

Values of string terms and of registered number functions are memoized per
compiled node, keyed on the values of the node's free variables.  Translated
formulas evaluate the same matrix term under every choice of the entry
indices, and the memo turns that into one evaluation per distinct input.

Every iteration of a quantifier counts against a budget.  Unbounded
quantifiers are refused outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..bitstring import BitString, pair
from .ast import (
    Add,
    And,
    Bot,
    CondNum,
    CondStr,
    Eq1,
    Eq2,
    LamBits,
    LamCells,
    Le,
    Len,
    Lt,
    Mem,
    Mul,
    NApp,
    Not,
    Num,
    NumQ,
    NVar,
    Or,
    PApp,
    SApp,
    StrQ,
    SVar,
    Top,
    conj,
    free_vars,
)

DEFAULT_BUDGET = 1 << 20


class Unsupported(ValueError):
    """The formula uses a construct the evaluator refuses to run."""


class BudgetExceeded(RuntimeError):
    """Quantifier enumeration went past the configured budget."""


class UnboundVariable(KeyError):
    pass


@dataclass
class _Counter:
    used: int = 0
    limit: int = DEFAULT_BUDGET

    def charge(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BudgetExceeded(
                f"quantifier budget of {self.limit} enumerations exhausted"
            )


class Evaluator:
    """Evaluate formulas and terms against a :class:`~.registry.Registry`.

    ``memo=False`` disables the per-node value cache (handy for timing the
    cache's effect and for cross-checking it in tests).
    """

    def __init__(self, registry, budget: int = DEFAULT_BUDGET, memo: bool = True):
        self.registry = registry
        self.budget = budget
        self.memo = memo
        self._fv: dict = {}
        self._compiled: dict[int, tuple] = {}
        self.counter = _Counter(limit=budget)

    # -- public API ------------------------------------------------------------

    def formula(self, phi, env: dict) -> bool:
        return bool(self._run(phi, env))

    def num(self, term, env: dict) -> int:
        return self._run(term, env)

    def string(self, term, env: dict) -> BitString:
        return self._run(term, env)

    def _run(self, node, env: dict):
        fn = self.compile(node)
        self.counter = _Counter(limit=self.budget)
        missing = [v for v in self._free(node) if v not in env]
        if missing:
            raise UnboundVariable(f"no value for free variable(s) {sorted(missing)}")
        return fn(dict(env))

    @property
    def enumerations(self) -> int:
        return self.counter.used

    # -- compilation -------------------------------------------------------------

    def _free(self, node) -> frozenset:
        return free_vars(node, self._fv)

    def compile(self, node) -> Callable[[dict], object]:
        hit = self._compiled.get(id(node))
        if hit is not None and hit[0] is node:
            return hit[1]
        fn = self._compile(node)
        self._compiled[id(node)] = (node, fn)
        return fn

    def _memoize(self, node, fn):
        if not self.memo:
            return fn
        names = tuple(sorted(self._free(node)))
        table: dict = {}
        if not names:
            def const(env):
                if "v" not in table:
                    table["v"] = fn(env)
                return table["v"]
            return const
        if len(names) == 1:
            (name,) = names

            def one(env):
                key = env[name]
                try:
                    return table[key]
                except KeyError:
                    out = table[key] = fn(env)
                    return out
            return one

        def many(env):
            key = tuple([env[n] for n in names])
            try:
                return table[key]
            except KeyError:
                out = table[key] = fn(env)
                return out
        return many

    def _compile(self, node):  # noqa: C901 -- one branch per node type
        c = self.compile
        if isinstance(node, Num):
            v = node.value
            return lambda env: v
        if isinstance(node, (NVar, SVar)):
            name = node.name

            def var(env):
                try:
                    return env[name]
                except KeyError:
                    raise UnboundVariable(name) from None
            return var
        if isinstance(node, Add):
            a, b = c(node.left), c(node.right)
            return lambda env: a(env) + b(env)
        if isinstance(node, Mul):
            a, b = c(node.left), c(node.right)
            return lambda env: a(env) * b(env)
        if isinstance(node, Len):
            s = c(node.arg)
            return lambda env: len(s(env))
        if isinstance(node, (NApp, SApp)):
            sym = self.registry.require(node.fn)
            impl = sym.impl
            args = [c(a) for a in node.args]
            if node.fn == "pair":
                a0, a1 = args
                return lambda env: pair(a0(env), a1(env))
            if len(args) == 1:
                (a0,) = args
                fn = lambda env: impl(a0(env))  # noqa: E731
            elif len(args) == 2:
                a0, a1 = args
                fn = lambda env: impl(a0(env), a1(env))  # noqa: E731
            else:
                fn = lambda env: impl(*[a(env) for a in args])  # noqa: E731
            return self._memoize(node, fn)
        if isinstance(node, CondNum):
            k, t, e = c(node.cond), c(node.then), c(node.other)
            return lambda env: t(env) if k(env) else e(env)
        if isinstance(node, CondStr):
            k, t, e = c(node.cond), c(node.then), c(node.other)
            return self._memoize(node, lambda env: t(env) if k(env) else e(env))
        if isinstance(node, LamBits):
            return self._memoize(node, self._lam_bits(node))
        if isinstance(node, LamCells):
            return self._memoize(node, self._lam_cells(node))
        if isinstance(node, Top):
            return lambda env: True
        if isinstance(node, Bot):
            return lambda env: False
        if isinstance(node, Eq1):
            a, b = c(node.left), c(node.right)
            return lambda env: a(env) == b(env)
        if isinstance(node, Le):
            a, b = c(node.left), c(node.right)
            return lambda env: a(env) <= b(env)
        if isinstance(node, Lt):
            a, b = c(node.left), c(node.right)
            return lambda env: a(env) < b(env)
        if isinstance(node, Mem):
            s, i = c(node.string), c(node.index)
            return lambda env: s(env)[i(env)]
        if isinstance(node, Eq2):
            a, b = c(node.left), c(node.right)
            return lambda env: a(env) == b(env)
        if isinstance(node, PApp):
            impl = self.registry.require(node.pred).impl
            args = [c(a) for a in node.args]
            if len(args) == 1:
                (a0,) = args
                return lambda env: bool(impl(a0(env)))
            return lambda env: bool(impl(*[a(env) for a in args]))
        if isinstance(node, Not):
            a = c(node.arg)
            return lambda env: not a(env)
        if isinstance(node, And):
            a, b = c(node.left), c(node.right)
            return lambda env: a(env) and b(env)
        if isinstance(node, Or):
            a, b = c(node.left), c(node.right)
            return lambda env: a(env) or b(env)
        if isinstance(node, NumQ):
            return self._num_quant(node)
        if isinstance(node, StrQ):
            return self._str_quant(node)
        raise TypeError(f"cannot evaluate {node!r}")

    def _sparse_guard(self, node: NumQ):
        """Recognize ``forall x<t (not S(x) or phi)`` and ``exists x<t (S(x) and phi)``.

        Only the set bits of S can matter in those shapes, so the quantifier
        may run over S's positions instead of the whole range.  Returns the
        compiled (S, phi) pair or None.
        """
        body = node.body
        if node.kind == "forall" and isinstance(body, Or) and isinstance(body.left, Not):
            guard, rest = body.left.arg, body.right
        elif node.kind == "exists" and isinstance(body, And):
            # (and A B C) folds to And(And(A, B), C); the guard is the leftmost leaf
            spine = []
            cur = body
            while isinstance(cur, And):
                spine.append(cur.right)
                cur = cur.left
            guard = cur
            rest = conj(*reversed(spine))
        else:
            return None
        if not (isinstance(guard, Mem) and guard.index == NVar(node.var)):
            return None
        if node.var in self._free(guard.string):
            return None
        return self.compile(guard.string), self.compile(rest)

    def _num_quant(self, node: NumQ):
        if node.bound is None:
            raise Unsupported(f"unbounded number quantifier over {node.var!r}")
        bound = self.compile(node.bound)
        body = self.compile(node.body)
        var = node.var
        strict = node.rel == "<"
        want_all = node.kind == "forall"
        ev = self
        sparse = self._sparse_guard(node)
        if sparse is not None:
            guard, rest = sparse

            def sparse_quant(env):
                top = bound(env) if strict else bound(env) + 1
                S = guard(env)
                saved = env.get(var, _MISSING)
                counter = ev.counter
                try:
                    for v in S.positions():
                        if v >= top:
                            break
                        counter.charge()
                        env[var] = v
                        if rest(env) != want_all:
                            return not want_all
                    return want_all
                finally:
                    _restore(env, var, saved)
            return sparse_quant

        def quant(env):
            top = bound(env) if strict else bound(env) + 1
            saved = env.get(var, _MISSING)
            counter = ev.counter
            try:
                for v in range(top):
                    counter.charge()
                    env[var] = v
                    if body(env) != want_all:
                        return not want_all
                return want_all
            finally:
                _restore(env, var, saved)
        return quant

    def _str_quant(self, node: StrQ):
        if node.bound is None:
            raise Unsupported(f"unbounded string quantifier over {node.var!r}")
        bound = self.compile(node.bound)
        body = self.compile(node.body)
        witness = self.compile(node.witness) if node.witness is not None else None
        var = node.var
        want_all = node.kind == "forall"
        ev = self

        def quant(env):
            n = bound(env)
            saved = env.get(var, _MISSING)
            try:
                if witness is not None and not want_all:
                    w = witness(env)
                    if len(w) <= n:
                        env[var] = w
                        ev.counter.charge()
                        if body(env):
                            return True
                space = 1 << n
                if ev.counter.used + space > ev.counter.limit:
                    raise BudgetExceeded(
                        f"string quantifier over {var!r} would enumerate {space} strings"
                    )
                for mask in range(space):
                    ev.counter.charge()
                    env[var] = BitString(mask)
                    if body(env) != want_all:
                        return not want_all
                return want_all
            finally:
                _restore(env, var, saved)
        return quant

    def _lam_bits(self, node: LamBits):
        rows, cols, body = self.compile(node.rows), self.compile(node.cols), self.compile(node.body)
        vi, vj = node.i, node.j

        def build(env):
            x, y = rows(env), cols(env)
            si, sj = env.get(vi, _MISSING), env.get(vj, _MISSING)
            bits = [pair(0, pair(x, y))]
            try:
                for i in range(1, x + 1):
                    env[vi] = i
                    for j in range(1, y + 1):
                        env[vj] = j
                        if body(env):
                            bits.append(pair(i, j))
            finally:
                _restore(env, vj, sj)
                _restore(env, vi, si)
            return BitString.from_positions(bits)
        return build

    def _lam_cells(self, node: LamCells):
        rows, cols, body = self.compile(node.rows), self.compile(node.cols), self.compile(node.body)
        vi, vj = node.i, node.j

        def build(env):
            x, y = rows(env), cols(env)
            si, sj = env.get(vi, _MISSING), env.get(vj, _MISSING)
            bits = [pair(0, pair(x, y))]
            try:
                for i in range(1, x + 1):
                    env[vi] = i
                    for j in range(1, y + 1):
                        env[vj] = j
                        bits.extend(pair(i, pair(j, k)) for k in body(env).positions())
            finally:
                _restore(env, vj, sj)
                _restore(env, vi, si)
            return BitString.from_positions(bits)
        return build


_MISSING = object()


def _restore(env: dict, var: str, saved) -> None:
    if saved is _MISSING:
        env.pop(var, None)
    else:
        env[var] = saved


def evaluate(phi, env: dict, registry, budget: int = DEFAULT_BUDGET) -> bool:
    """One-shot convenience wrapper around :class:`Evaluator`."""
    return Evaluator(registry, budget=budget).formula(phi, env)
