"""Random LAp terms, formulas and environments.

Everything is driven by an explicit :class:`random.Random`, so a seed
reproduces a run.  Generated terms respect the syntactic restrictions
(cond conditions compare indices, lambda dimensions avoid the binders) and
keep values desk-sized: dimension terms and powering exponents are drawn
from a small pool so that matrices stay within ``size_bound``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..ring import Ring
from .ast import (
    FIELD,
    INDEX,
    MATRIX,
    And,
    App,
    Cond,
    Const,
    Lam,
    Not,
    Or,
    Rel,
    Var,
)
from .evaluator import MatVal

BINDERS = ("i", "j")


@dataclass(frozen=True)
class GenConfig:
    depth: int = 3
    size_bound: int = 4
    entry_bound: int = 9
    index_vars: tuple = ("i", "j", "k", "m", "n")
    field_vars: tuple = ("a", "b", "c")
    matrix_vars: tuple = ("A", "B", "C")
    inverse: bool = False
    derived: bool = True
    max_power: int = 3


# dimension weights: 1x1 and empty shapes are over-represented so that the
# hypotheses of A30-A34 fire regularly
_DIM_WEIGHTS = (1, 3, 2, 2, 2, 1, 1)


class TermGen:
    def __init__(self, rng: random.Random, cfg: GenConfig = GenConfig(), avoid: frozenset = frozenset()):
        self.rng = rng
        self.cfg = cfg
        self.ivars = tuple(v for v in cfg.index_vars if v not in avoid) or ("k",)
        self.dim_vars = tuple(v for v in self.ivars if v not in BINDERS)

    # -- helpers --------------------------------------------------------------
    def _pick(self, options):
        return self.rng.choice(options)

    def dim(self) -> object:
        """A small index term usable as a lambda dimension (binder-free)."""
        rng = self.rng
        roll = rng.random()
        if roll < 0.45 or not self.dim_vars:
            return Const(rng.randint(0, self.cfg.size_bound), INDEX)
        if roll < 0.75:
            return Var(rng.choice(self.dim_vars), INDEX)
        A = Var(rng.choice(self.cfg.matrix_vars), MATRIX)
        return App(rng.choice(("r", "c")), (A,), INDEX)

    def exponent(self) -> object:
        rng = self.rng
        if rng.random() < 0.6 or not self.dim_vars:
            return Const(rng.randint(0, self.cfg.max_power), INDEX)
        return Var(rng.choice(self.dim_vars), INDEX)

    # -- terms ----------------------------------------------------------------
    def term(self, sort: str, depth: int):
        return {INDEX: self.index, FIELD: self.field, MATRIX: self.matrix}[sort](depth)

    def index(self, depth: int):
        rng = self.rng
        if depth <= 0 or rng.random() < 0.3:
            if rng.random() < 0.6:
                return Var(rng.choice(self.ivars), INDEX)
            return Const(rng.randint(0, 2), INDEX)
        d = depth - 1
        choices = ["+", "*", "-", "div", "rem", "r", "c", "cond"]
        if self.cfg.derived:
            choices.append("max")
        op = rng.choice(choices)
        if op in ("r", "c"):
            return App(op, (self.matrix(d),), INDEX)
        if op == "cond":
            return Cond(self.index_formula(d), self.index(d), self.index(d), INDEX)
        return App(op, (self.index(d), self.index(d)), INDEX)

    def field(self, depth: int):
        rng = self.rng
        if depth <= 0 or rng.random() < 0.25:
            if rng.random() < 0.6:
                return Var(rng.choice(self.cfg.field_vars), FIELD)
            return Const(rng.randint(0, 1), FIELD)
        d = depth - 1
        choices = ["+", "*", "-", "neg", "e", "e", "Sigma", "cond"]
        if self.cfg.inverse:
            choices.append("inv")
        if self.cfg.derived:
            choices += ["trace", "dot"]
        op = rng.choice(choices)
        if op in ("+", "*", "-"):
            return App(op, (self.field(d), self.field(d)), FIELD)
        if op in ("neg", "inv"):
            return App(op, (self.field(d),), FIELD)
        if op == "e":
            return App("e", (self.matrix(d), self.index(d), self.index(d)), FIELD)
        if op in ("Sigma", "trace"):
            return App(op, (self.matrix(d),), FIELD)
        if op == "dot":
            return App("dot", (self.matrix(d), self.matrix(d)), FIELD)
        return Cond(self.index_formula(d), self.field(d), self.field(d), FIELD)

    def matrix(self, depth: int):
        rng = self.rng
        if depth <= 0 or rng.random() < 0.3:
            return Var(rng.choice(self.cfg.matrix_vars), MATRIX)
        d = depth - 1
        choices = ["lambda", "lambda", "p", "p"]
        if self.cfg.derived:
            choices += ["sum", "matmul", "scalarmul", "transpose", "zero", "identity", "R", "S", "M"]
        op = rng.choice(choices)
        if op == "lambda":
            return Lam(BINDERS[0], BINDERS[1], self.dim(), self.dim(), self.field(d))
        if op == "p":
            return App("p", (self.exponent(), self.matrix(d)), MATRIX)
        if op in ("sum", "matmul"):
            return App(op, (self.matrix(d), self.matrix(d)), MATRIX)
        if op == "scalarmul":
            return App(op, (self.field(d), self.matrix(d)), MATRIX)
        if op == "zero":
            return App(op, (self.dim(), self.dim()), MATRIX)
        if op == "identity":
            return App(op, (self.dim(),), MATRIX)
        return App(op, (self.matrix(d),), MATRIX)

    # -- formulas -------------------------------------------------------------
    def index_formula(self, depth: int):
        rng = self.rng
        if depth <= 0 or rng.random() < 0.6:
            d = max(depth - 1, 0)
            return Rel(rng.choice(("=", "<=")), self.index(d), self.index(d))
        d = depth - 1
        kind = rng.choice(("and", "or", "not"))
        if kind == "not":
            return Not(self.index_formula(d))
        cls = And if kind == "and" else Or
        return cls(self.index_formula(d), self.index_formula(d))

    def atom(self, depth: int):
        rng = self.rng
        kind = rng.choice((INDEX, INDEX, FIELD, FIELD, MATRIX, MATRIX))
        if kind == INDEX:
            return Rel(rng.choice(("=", "<=")), self.index(depth), self.index(depth))
        t = self.term(kind, depth)
        # equations between a term and a near-copy are true more often
        u = t if rng.random() < 0.2 else self.term(kind, depth)
        return Rel("=", t, u)

    def formula(self, depth: int):
        rng = self.rng
        if depth <= 1 or rng.random() < 0.4:
            return self.atom(max(depth - 1, 0))
        d = depth - 1
        kind = rng.choice(("and", "or", "not"))
        if kind == "not":
            return Not(self.formula(d))
        cls = And if kind == "and" else Or
        return cls(self.formula(d), self.formula(d))


# -- environments ---------------------------------------------------------------------


def random_field(rng: random.Random, ring: Ring, bound: int = 9) -> int:
    if ring.modulus == 2:
        return rng.randint(0, 1)
    return rng.randint(-bound, bound)


def random_dim(rng: random.Random, size_bound: int) -> int:
    weights = _DIM_WEIGHTS[: size_bound + 1]
    return rng.choices(range(len(weights)), weights=weights)[0]


def random_matrix(rng: random.Random, ring: Ring, r: int, c: int, bound: int = 9) -> MatVal:
    return MatVal(r, c, tuple(tuple(random_field(rng, ring, bound) for _ in range(c)) for _ in range(r)))


def random_env(sorts: dict, rng: random.Random, ring: Ring, size_bound: int = 4, entry_bound: int = 9) -> dict:
    """Random values for ``{name: sort}`` (sort ``formula`` gets a boolean)."""
    env = {}
    for name, sort in sorted(sorts.items()):
        if sort == INDEX:
            env[name] = rng.randint(0, size_bound)
        elif sort == FIELD:
            env[name] = random_field(rng, ring, entry_bound)
        elif sort == MATRIX:
            r = random_dim(rng, size_bound)
            c = r if rng.random() < 0.5 else random_dim(rng, size_bound)
            env[name] = random_matrix(rng, ring, r, c, entry_bound)
        else:
            env[name] = rng.random() < 0.5
    return env
