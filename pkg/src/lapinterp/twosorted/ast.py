"""Syntax trees for two-sorted formulas over L2_A plus named function symbols.

Number variables are lowercase identifiers and string variables start with an
uppercase letter.  Registered function and predicate symbols are applied with
:class:`NApp` (number valued), :class:`SApp` (string valued) and :class:`PApp`.
Arguments are written numbers first, then strings, but the trees just keep
one argument tuple.

Besides fixed symbols, the interpretations need families of functions indexed
by formulas or terms.  Those are explicit nodes:

* :class:`CondNum` / :class:`CondStr` -- ``f_phi(x, y)`` and ``F^cond_phi(X, Y)``
* :class:`LamBits` -- the bit-matrix builder ``F_phi(x, y)`` with bound ``i, j``
* :class:`LamCells` -- the integer-matrix builder ``F#_T(x, y)``
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union


def is_string_var(name: str) -> bool:
    return name[:1].isupper()


# -- number terms --------------------------------------------------------------


@dataclass(frozen=True)
class NVar:
    name: str


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Add:
    left: "NTerm"
    right: "NTerm"


@dataclass(frozen=True)
class Mul:
    left: "NTerm"
    right: "NTerm"


@dataclass(frozen=True)
class Len:
    arg: "STerm"


@dataclass(frozen=True)
class NApp:
    fn: str
    args: tuple


@dataclass(frozen=True)
class CondNum:
    cond: "Formula"
    then: "NTerm"
    other: "NTerm"


NTerm = Union[NVar, Num, Add, Mul, Len, NApp, CondNum]


# -- string terms --------------------------------------------------------------


@dataclass(frozen=True)
class SVar:
    name: str


@dataclass(frozen=True)
class SApp:
    fn: str
    args: tuple


@dataclass(frozen=True)
class CondStr:
    cond: "Formula"
    then: "STerm"
    other: "STerm"


@dataclass(frozen=True)
class LamBits:
    """Header bit <0,<x,y>> plus bit <i,j> for 0 < i <= x, 0 < j <= y where body holds."""

    i: str
    j: str
    rows: NTerm
    cols: NTerm
    body: "Formula"


@dataclass(frozen=True)
class LamCells:
    """Header bit <0,<x,y>> plus bits <i,<j,k>> where bit k of body(i, j) is set."""

    i: str
    j: str
    rows: NTerm
    cols: NTerm
    body: "STerm"


STerm = Union[SVar, SApp, CondStr, LamBits, LamCells]


# -- formulas ------------------------------------------------------------------


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Eq1:
    left: NTerm
    right: NTerm


@dataclass(frozen=True)
class Le:
    left: NTerm
    right: NTerm


@dataclass(frozen=True)
class Lt:
    left: NTerm
    right: NTerm


@dataclass(frozen=True)
class Mem:
    string: STerm
    index: NTerm


@dataclass(frozen=True)
class Eq2:
    left: STerm
    right: STerm


@dataclass(frozen=True)
class PApp:
    pred: str
    args: tuple


@dataclass(frozen=True)
class Not:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class NumQ:
    """Number quantifier; ``rel`` is '<', '<=' or None (unbounded)."""

    kind: str  # 'forall' | 'exists'
    var: str
    rel: Optional[str]
    bound: Optional[NTerm]
    body: "Formula"


@dataclass(frozen=True)
class StrQ:
    """String quantifier over |X| <= bound; ``witness`` is an optional term
    tried first by the evaluator."""

    kind: str
    var: str
    bound: Optional[NTerm]
    body: "Formula"
    witness: Optional[STerm] = field(default=None)


Formula = Union[Top, Bot, Eq1, Le, Lt, Mem, Eq2, PApp, Not, And, Or, NumQ, StrQ]
Node = Union[NTerm, STerm, Formula]

TOP = Top()
BOT = Bot()


# -- derived connectives -------------------------------------------------------


def conj(*parts: "Formula") -> "Formula":
    if not parts:
        return TOP
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(*parts: "Formula") -> "Formula":
    if not parts:
        return BOT
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def implies(a: "Formula", b: "Formula") -> "Formula":
    return Or(Not(a), b)


def iff(a: "Formula", b: "Formula") -> "Formula":
    return Or(And(a, b), And(Not(a), Not(b)))


def xor(a: "Formula", b: "Formula") -> "Formula":
    return Or(And(a, Not(b)), And(Not(a), b))


def forall(var: str, rel: Optional[str], bound: Optional[NTerm], body: "Formula") -> NumQ:
    return NumQ("forall", var, rel, bound, body)


def exists(var: str, rel: Optional[str], bound: Optional[NTerm], body: "Formula") -> NumQ:
    return NumQ("exists", var, rel, bound, body)


def pair_t(x: NTerm, y: NTerm) -> NApp:
    return NApp("pair", (x, y))


def children(node) -> tuple:
    if isinstance(node, (NVar, Num, SVar, Top, Bot)):
        return ()
    if isinstance(node, (Add, Mul, Eq1, Le, Lt, Eq2, And, Or)):
        return (node.left, node.right)
    if isinstance(node, Len):
        return (node.arg,)
    if isinstance(node, (NApp, SApp)):
        return node.args
    if isinstance(node, PApp):
        return node.args
    if isinstance(node, (CondNum, CondStr)):
        return (node.cond, node.then, node.other)
    if isinstance(node, (LamBits, LamCells)):
        return (node.rows, node.cols, node.body)
    if isinstance(node, Mem):
        return (node.string, node.index)
    if isinstance(node, Not):
        return (node.arg,)
    if isinstance(node, NumQ):
        return tuple(x for x in (node.bound, node.body) if x is not None)
    if isinstance(node, StrQ):
        return tuple(x for x in (node.bound, node.body, node.witness) if x is not None)
    raise TypeError(f"not a two-sorted node: {node!r}")


def free_vars(node, _cache: dict | None = None) -> frozenset:
    """Free number and string variables of a term or formula."""
    cache = _cache if _cache is not None else {}
    key = id(node)
    hit = cache.get(key)
    if hit is not None and hit[0] is node:
        return hit[1]
    if isinstance(node, (NVar, SVar)):
        out = frozenset([node.name])
    elif isinstance(node, (NumQ, StrQ)):
        inner = free_vars(node.body, cache) - {node.var}
        if node.bound is not None:
            inner |= free_vars(node.bound, cache)
        if isinstance(node, StrQ) and node.witness is not None:
            inner |= free_vars(node.witness, cache)
        out = inner
    elif isinstance(node, (LamBits, LamCells)):
        out = (
            free_vars(node.rows, cache)
            | free_vars(node.cols, cache)
            | (free_vars(node.body, cache) - {node.i, node.j})
        )
    else:
        out = frozenset()
        for ch in children(node):
            out |= free_vars(ch, cache)
    cache[key] = (node, out)
    return out


def node_sort(node) -> str:
    """'num', 'str' or 'formula'."""
    if isinstance(node, (NVar, Num, Add, Mul, Len, NApp, CondNum)):
        return "num"
    if isinstance(node, (SVar, SApp, CondStr, LamBits, LamCells)):
        return "str"
    return "formula"
