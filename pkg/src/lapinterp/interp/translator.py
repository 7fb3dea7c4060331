"""Compile LAp syntax into two-sorted formulas.

Two targets are supported:

``z2``
    Field terms become *formulas* (a field element of Z2 is a truth value).
    Addition and subtraction are exclusive or, multiplication is
    conjunction, the inverse is the identity.  Matrices are wrapped Z2
    matrices (see :mod:`.vocab`).
``z``
    Field terms become *string terms* denoting binary integers, built from
    ``addz``, ``mulz`` and ``negz``.  Matrices are wrapped Z matrices.  The
    field inverse has no translation.

Index terms map to number terms over both targets.  Derived operators are
expanded to core syntax first.

Variables are renamed injectively: an index variable keeps its name, a
matrix variable keeps its name, a field variable ``a`` becomes the string
variable ``X:a`` and a formula variable ``alpha`` becomes the atom
``(in P:alpha 0)``.  The colon cannot occur in an LAp identifier, so these
names never collide with translated matrix variables.  Over Z2 the field
variable's value is bit ``<1, 1>`` of ``X:a`` (a 1 x 1 carrier); over Z the
string is the binary integer itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..lap import ast as L
from ..lap.derived import expand_all
from ..twosorted import ast as T

TARGETS = ("z2", "z")


class TranslationError(ValueError):
    pass


def field_carrier(name: str) -> str:
    return f"X:{name}"


def formula_carrier(name: str) -> str:
    return f"P:{name}"


@dataclass
class TranslationContext:
    """Target plus the variable maps built up while translating.

    ``equality_bound`` picks how far matrix equality compares entries:
    ``"dims"`` ranges over the rows and columns both sides claim (the sum of
    the two row counts and of the two column counts), ``"length"`` uses the
    literal bound ``|T| + |U|`` on both coordinates, which is equivalent but
    far slower to evaluate.
    """

    target: str
    equality_bound: str = "dims"
    index_vars: dict = field(default_factory=dict)
    field_vars: dict = field(default_factory=dict)
    matrix_vars: dict = field(default_factory=dict)
    formula_vars: dict = field(default_factory=dict)
    _counter: itertools.count = field(default_factory=itertools.count, repr=False)

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}; expected one of {TARGETS}")
        if self.equality_bound not in ("dims", "length"):
            raise ValueError(f"unknown equality bound {self.equality_bound!r}")

    @property
    def z2(self) -> bool:
        return self.target == "z2"

    def fresh(self, base: str) -> str:
        # ':' keeps quantified names apart from every LAp identifier
        return f"{base}:{next(self._counter)}"

    def var_map(self) -> dict:
        """LAp variable name -> two-sorted variable name."""
        out = {}
        for table in (self.index_vars, self.field_vars, self.matrix_vars, self.formula_vars):
            out.update(table)
        return out


class _Translator:
    def __init__(self, ctx: TranslationContext):
        self.ctx = ctx
        self.z2 = ctx.z2
        # symbol names for the target
        self.is_matrix = "isMatrix2" if self.z2 else "isMatrixZ"
        self.rows = "f_r" if self.z2 else "f_rz"
        self.cols = "f_c" if self.z2 else "f_cz"

    # -- index terms ------------------------------------------------------------------

    def index(self, m):
        if isinstance(m, L.Var):
            self.ctx.index_vars[m.name] = m.name
            return T.NVar(m.name)
        if isinstance(m, L.Const):
            return T.Num(m.value)
        if isinstance(m, L.Cond):
            return T.CondNum(self.formula(m.cond), self.index(m.then), self.index(m.other))
        if isinstance(m, L.App):
            op, args = m.op, m.args
            if op in ("r", "c"):
                fn = self.rows if op == "r" else self.cols
                return T.NApp(fn, (self.matrix(args[0]),))
            a, b = self.index(args[0]), self.index(args[1])
            if op == "+":
                return T.Add(a, b)
            if op == "*":
                return T.Mul(a, b)
            fn = {"-": "monus", "div": "fdiv", "rem": "frem"}.get(op)
            if fn is not None:
                return T.NApp(fn, (a, b))
        raise TranslationError(f"no index translation for {_show(m)}")

    # -- field terms --------------------------------------------------------------------

    def field(self, t):
        return self.field2(t) if self.z2 else self.fieldz(t)

    def field2(self, t):
        """A formula that holds iff the Z2 value of ``t`` is 1."""
        if isinstance(t, L.Var):
            name = self.ctx.field_vars.setdefault(t.name, field_carrier(t.name))
            return T.Mem(T.SVar(name), T_pair(1, 1))
        if isinstance(t, L.Const):
            return T.TOP if t.value % 2 else T.BOT
        if isinstance(t, L.Cond):
            c = self.formula(t.cond)
            return T.Or(T.And(c, self.field2(t.then)), T.And(T.Not(c), self.field2(t.other)))
        op, args = t.op, t.args
        if op in ("+", "-"):
            return T.xor(self.field2(args[0]), self.field2(args[1]))
        if op == "*":
            return T.And(self.field2(args[0]), self.field2(args[1]))
        if op in ("neg", "inv"):
            return self.field2(args[0])
        if op == "e":
            M = self.matrix(args[0])
            return self._entry2(M, self.index(args[1]), self.index(args[2]))
        if op == "Sigma":
            M = self.matrix(args[0])
            # the header bit adds one to the count, hence the negation
            return T.And(T.Not(T.PApp("PAR", (M,))), T.PApp("isMatrix2", (M,)))
        raise TranslationError(f"no Z2 field translation for {_show(t)}")

    def _entry2(self, M, i, j):
        return T.conj(
            T.Mem(M, T.NApp("pair", (i, j))),
            T.Lt(T.Num(0), i),
            T.Lt(T.Num(0), j),
            T.PApp("isMatrix2", (M,)),
        )

    def fieldz(self, t):
        """A string term whose binary-integer value is the value of ``t``."""
        if isinstance(t, L.Var):
            name = self.ctx.field_vars.setdefault(t.name, field_carrier(t.name))
            return T.SVar(name)
        if isinstance(t, L.Const):
            if t.value == 0:
                return T.SApp("Empty", ())
            if t.value == 1:
                return T.SApp("OneZ", ())
            raise TranslationError(f"field constant {t.value} has no translation")
        if isinstance(t, L.Cond):
            return T.CondStr(self.formula(t.cond), self.fieldz(t.then), self.fieldz(t.other))
        op, args = t.op, t.args
        if op == "+":
            return T.SApp("addz", (self.fieldz(args[0]), self.fieldz(args[1])))
        if op == "*":
            return T.SApp("mulz", (self.fieldz(args[0]), self.fieldz(args[1])))
        if op == "-":
            neg = T.SApp("negz", (self.fieldz(args[1]),))
            return T.SApp("addz", (self.fieldz(args[0]), neg))
        if op == "neg":
            return T.SApp("negz", (self.fieldz(args[0]),))
        if op == "inv":
            raise TranslationError(f"the field inverse has no translation over Z: {_show(t)}")
        if op == "e":
            M = self.matrix(args[0])
            return T.SApp("Fe", (self.index(args[1]), self.index(args[2]), M))
        if op == "Sigma":
            return T.SApp("Fsum", (self.matrix(args[0]),))
        raise TranslationError(f"no Z field translation for {_show(t)}")

    # -- matrix terms ---------------------------------------------------------------------

    def matrix(self, T_):
        if isinstance(T_, L.Var):
            self.ctx.matrix_vars[T_.name] = T_.name
            return T.SVar(T_.name)
        if isinstance(T_, L.Lam):
            rows, cols = self.index(T_.rows), self.index(T_.cols)
            self.ctx.index_vars.setdefault(T_.i, T_.i)
            self.ctx.index_vars.setdefault(T_.j, T_.j)
            if self.z2:
                return T.LamBits(T_.i, T_.j, rows, cols, self.field2(T_.body))
            return T.LamCells(T_.i, T_.j, rows, cols, self.fieldz(T_.body))
        if isinstance(T_, L.App) and T_.op == "p":
            fn = "Fp" if self.z2 else "FpZ"
            return T.SApp(fn, (self.index(T_.args[0]), self.matrix(T_.args[1])))
        raise TranslationError(f"no matrix translation for {_show(T_)}")

    # -- formulas ----------------------------------------------------------------------

    def formula(self, phi):
        if isinstance(phi, L.Not):
            return T.Not(self.formula(phi.arg))
        if isinstance(phi, L.And):
            return T.And(self.formula(phi.left), self.formula(phi.right))
        if isinstance(phi, L.Or):
            return T.Or(self.formula(phi.left), self.formula(phi.right))
        if isinstance(phi, L.FormulaVar):
            name = self.ctx.formula_vars.setdefault(phi.name, formula_carrier(phi.name))
            return T.Mem(T.SVar(name), T.Num(0))
        if isinstance(phi, L.Rel):
            return self.atom(phi)
        raise TranslationError(f"not a formula: {phi!r}")

    def atom(self, phi: L.Rel):
        sort = phi.left.sort
        if sort == L.INDEX:
            a, b = self.index(phi.left), self.index(phi.right)
            return T.Eq1(a, b) if phi.op == "=" else T.Le(a, b)
        if phi.op != "=":
            raise TranslationError(f"'<=' between {sort} terms: {_show(phi)}")
        if sort == L.FIELD:
            if self.z2:
                return T.iff(self.field2(phi.left), self.field2(phi.right))
            return T.PApp("eqz", (self.fieldz(phi.left), self.fieldz(phi.right)))
        return self.matrix_equality(self.matrix(phi.left), self.matrix(phi.right))

    def matrix_equality(self, A, B):
        rows = lambda X: T.NApp(self.rows, (X,))  # noqa: E731
        cols = lambda X: T.NApp(self.cols, (X,))  # noqa: E731
        i, j = self.ctx.fresh("i"), self.ctx.fresh("j")
        I, J = T.NVar(i), T.NVar(j)
        if self.z2:
            same = T.iff(self._entry2(A, I, J), self._entry2(B, I, J))
        else:
            same = T.PApp("eqz", (T.SApp("Fe", (I, J, A)), T.SApp("Fe", (I, J, B))))
        if self.ctx.equality_bound == "dims":
            ri, cj = T.Add(rows(A), rows(B)), T.Add(cols(A), cols(B))
        else:
            ri = cj = T.Add(T.Len(A), T.Len(B))
        entries = T.forall(i, "<=", ri, T.forall(j, "<=", cj, same))
        return T.conj(T.Eq1(rows(A), rows(B)), T.Eq1(cols(A), cols(B)), entries)

    def sequent(self, s: L.Sequent):
        ante = T.conj(*[self.formula(f) for f in s.ante])
        succ = T.disj(*[self.formula(f) for f in s.succ])
        return T.implies(ante, succ)


def T_pair(x: int, y: int):
    return T.NApp("pair", (T.Num(x), T.Num(y)))


def _show(node) -> str:
    from ..lap.parser import show

    try:
        return show(node)
    except Exception:  # pragma: no cover - only for error messages
        return repr(node)


def _check_inverse(node, ctx: TranslationContext) -> None:
    if not ctx.z2 and L.contains_inverse(node):
        culprit = next(n for n in _walk(node) if isinstance(n, L.App) and n.op == "inv")
        raise TranslationError(f"the field inverse has no translation over Z: {_show(culprit)}")


def _walk(node):
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        if isinstance(n, L.Sequent):
            stack.extend(n.ante)
            stack.extend(n.succ)
        else:
            stack.extend(L.children(n))


def translate(node, target: str = "z2", ctx: TranslationContext | None = None):
    """Translate an LAp term, formula or sequent.

    Index terms give number terms.  Field terms give formulas over ``z2``
    and string terms over ``z``.  Matrix terms give string terms.  Formulas
    give formulas, and a sequent ``G |- D`` gives ``/\\G -> \\/D``.
    """
    ctx = ctx or TranslationContext(target)
    if ctx.target != target:
        raise ValueError(f"context is for {ctx.target}, not {target}")
    _check_inverse(node, ctx)
    node = expand_all(node)
    tr = _Translator(ctx)
    if isinstance(node, L.Sequent):
        return tr.sequent(node)
    if isinstance(node, (L.Rel, L.Not, L.And, L.Or, L.FormulaVar)):
        return tr.formula(node)
    sort = getattr(node, "sort", None)
    if sort == L.INDEX:
        return tr.index(node)
    if sort == L.FIELD:
        return tr.field(node)
    if sort == L.MATRIX:
        return tr.matrix(node)
    raise TranslationError(f"cannot translate {node!r}")


def translate_index(m, ctx: TranslationContext):
    if m.sort != L.INDEX:
        raise TranslationError("expected an index term")
    return translate(m, ctx.target, ctx)


def translate_field(t, ctx: TranslationContext):
    if t.sort != L.FIELD:
        raise TranslationError("expected a field term")
    return translate(t, ctx.target, ctx)


def translate_matrix(t, ctx: TranslationContext):
    if t.sort != L.MATRIX:
        raise TranslationError("expected a matrix term")
    return translate(t, ctx.target, ctx)


def translate_formula(phi, ctx: TranslationContext):
    return translate(phi, ctx.target, ctx)
