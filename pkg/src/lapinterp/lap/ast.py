"""Typed syntax trees for the three-sorted language of LAp.

Sorts are ``index``, ``field`` and ``matrix``.  Every term node carries its
sort.  Operator names:

index   ``+ * - div rem r c max``       (``-`` is cutoff subtraction)
field   ``+ * - neg inv e Sigma trace dot``
matrix  ``p sum matmul scalarmul transpose zero identity R S M``

``max`` and the field/matrix operators from ``sum`` on are abbreviations.
They stay as :class:`App` nodes so that printing keeps them readable, and
:func:`lapinterp.lap.derived.expand` rewrites them into core terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Union

INDEX, FIELD, MATRIX = "index", "field", "matrix"
SORTS = (INDEX, FIELD, MATRIX)


def sort_of_name(name: str) -> str:
    """Variable naming convention: uppercase initial for matrices, a-h for
    field elements, anything else is an index."""
    first = name[:1]
    if first.isupper():
        return MATRIX
    if "a" <= first <= "h":
        return FIELD
    return INDEX


# -- terms --------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str
    sort: str


@dataclass(frozen=True)
class Const:
    value: int
    sort: str


@dataclass(frozen=True)
class App:
    op: str
    args: tuple
    sort: str


@dataclass(frozen=True)
class Lam:
    i: str
    j: str
    rows: "Term"
    cols: "Term"
    body: "Term"
    sort: str = MATRIX


@dataclass(frozen=True)
class Cond:
    cond: "Formula"
    then: "Term"
    other: "Term"
    sort: str


Term = Union[Var, Const, App, Lam, Cond]


# -- formulas -----------------------------------------------------------------------


@dataclass(frozen=True)
class Rel:
    op: str  # '=' or '<='
    left: Term
    right: Term


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
class FormulaVar:
    """A formula metavariable (the alpha of the cond axioms)."""

    name: str


Formula = Union[Rel, Not, And, Or, FormulaVar]


@dataclass(frozen=True)
class Sequent:
    ante: tuple
    succ: tuple


# -- operator table ---------------------------------------------------------------

# op -> (argument sorts, result sort); None marks the overloaded arithmetic
SIGNATURES: dict[tuple[str, str], tuple] = {
    ("+", INDEX): (INDEX, INDEX),
    ("*", INDEX): (INDEX, INDEX),
    ("-", INDEX): (INDEX, INDEX),
    ("div", INDEX): (INDEX, INDEX),
    ("rem", INDEX): (INDEX, INDEX),
    ("r", INDEX): (MATRIX,),
    ("c", INDEX): (MATRIX,),
    ("max", INDEX): (INDEX, INDEX),
    ("+", FIELD): (FIELD, FIELD),
    ("*", FIELD): (FIELD, FIELD),
    ("-", FIELD): (FIELD, FIELD),
    ("neg", FIELD): (FIELD,),
    ("inv", FIELD): (FIELD,),
    ("e", FIELD): (MATRIX, INDEX, INDEX),
    ("Sigma", FIELD): (MATRIX,),
    ("trace", FIELD): (MATRIX,),
    ("dot", FIELD): (MATRIX, MATRIX),
    ("p", MATRIX): (INDEX, MATRIX),
    ("sum", MATRIX): (MATRIX, MATRIX),
    ("matmul", MATRIX): (MATRIX, MATRIX),
    ("scalarmul", MATRIX): (FIELD, MATRIX),
    ("transpose", MATRIX): (MATRIX,),
    ("zero", MATRIX): (INDEX, INDEX),
    ("identity", MATRIX): (INDEX,),
    ("R", MATRIX): (MATRIX,),
    ("S", MATRIX): (MATRIX,),
    ("M", MATRIX): (MATRIX,),
}

DERIVED_OPS = frozenset(
    {"max", "sum", "matmul", "scalarmul", "transpose", "zero", "identity",
     "trace", "dot", "R", "S", "M"}
)

# named (prefix) functions and their result sorts; arithmetic is infix
NAMED_FUNCTIONS = {
    "div": INDEX, "rem": INDEX, "r": INDEX, "c": INDEX, "max": INDEX,
    "inv": FIELD, "e": FIELD, "Sigma": FIELD, "trace": FIELD, "dot": FIELD,
    "p": MATRIX, "transpose": MATRIX, "zero": MATRIX, "identity": MATRIX,
    "scalarmul": MATRIX, "R": MATRIX, "S": MATRIX, "M": MATRIX,
}


def app(op: str, *args, sort: str | None = None) -> App:
    """Build an App, checking argument sorts against :data:`SIGNATURES`."""
    if sort is None:
        sort = NAMED_FUNCTIONS.get(op) or {
            "neg": FIELD, "sum": MATRIX, "matmul": MATRIX
        }.get(op)
        if sort is None:
            sort = args[0].sort
    sig = SIGNATURES.get((op, sort))
    if sig is None:
        raise TypeError(f"no operator {op!r} of sort {sort}")
    if len(sig) != len(args):
        raise TypeError(f"{op} takes {len(sig)} arguments, got {len(args)}")
    for want, a in zip(sig, args):
        if a.sort != want:
            raise TypeError(f"{op}: expected a {want} argument, got {a.sort}")
    return App(op, tuple(args), sort)


# -- traversal -----------------------------------------------------------------------


def children(node) -> tuple:
    if isinstance(node, (Var, Const, FormulaVar)):
        return ()
    if isinstance(node, App):
        return node.args
    if isinstance(node, Lam):
        return (node.rows, node.cols, node.body)
    if isinstance(node, Cond):
        return (node.cond, node.then, node.other)
    if isinstance(node, Rel):
        return (node.left, node.right)
    if isinstance(node, Not):
        return (node.arg,)
    if isinstance(node, (And, Or)):
        return (node.left, node.right)
    if isinstance(node, Sequent):
        return node.ante + node.succ
    raise TypeError(f"not an LAp node: {node!r}")


def free_vars(node) -> frozenset:
    """Free term variables (as Var nodes' names).  Formula variables excluded."""
    if isinstance(node, Var):
        return frozenset([node.name])
    if isinstance(node, Lam):
        return (
            free_vars(node.rows)
            | free_vars(node.cols)
            | (free_vars(node.body) - {node.i, node.j})
        )
    out: frozenset = frozenset()
    for ch in children(node):
        out |= free_vars(ch)
    return out


def free_var_sorts(node, acc: dict | None = None, bound: frozenset = frozenset()) -> dict:
    """Map each free variable name to its sort."""
    acc = {} if acc is None else acc
    if isinstance(node, Var):
        if node.name not in bound:
            acc[node.name] = node.sort
        return acc
    if isinstance(node, Lam):
        free_var_sorts(node.rows, acc, bound)
        free_var_sorts(node.cols, acc, bound)
        free_var_sorts(node.body, acc, bound | {node.i, node.j})
        return acc
    for ch in children(node):
        free_var_sorts(ch, acc, bound)
    return acc


def formula_vars(node) -> frozenset:
    if isinstance(node, FormulaVar):
        return frozenset([node.name])
    out: frozenset = frozenset()
    for ch in children(node):
        out |= formula_vars(ch)
    return out


def all_names(node) -> set:
    """Every variable name occurring anywhere, bound or free."""
    out: set = set()
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, Var):
            out.add(n.name)
        elif isinstance(n, Lam):
            out.update((n.i, n.j))
        stack.extend(children(n))
    return out


def fresh(base: str, avoid) -> str:
    if base not in avoid:
        return base
    for k in count(1):
        cand = f"{base}{k}"
        if cand not in avoid:
            return cand
    raise AssertionError("unreachable")


def is_index_only(phi) -> bool:
    """True iff every atom compares index terms (the restriction on cond)."""
    if isinstance(phi, Rel):
        return phi.left.sort == INDEX
    if isinstance(phi, FormulaVar):
        return True
    return all(is_index_only(ch) for ch in children(phi))


def contains_inverse(node) -> bool:
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, App) and n.op == "inv":
            return True
        stack.extend(children(n))
    return False


def size(node) -> int:
    return 1 + sum(size(ch) for ch in children(node))


# -- substitution ---------------------------------------------------------------------


def substitute(node, mapping: dict, capturing: frozenset = frozenset()):
    """Replace free variables (by name) and formula variables.

    ``mapping`` sends variable names to terms and formula-variable names to
    formulas.  Lambda binders are renamed when a substituted term would have
    a free variable captured, except for names listed in ``capturing``: their
    replacements are meant to see the binders (the lambda axiom needs this for
    its entry term).
    """
    if not mapping:
        return node
    if isinstance(node, Var):
        return mapping.get(node.name, node)
    if isinstance(node, FormulaVar):
        return mapping.get(node.name, node)
    if isinstance(node, Const):
        return node
    if isinstance(node, App):
        return App(node.op, tuple(substitute(a, mapping, capturing) for a in node.args), node.sort)
    if isinstance(node, Cond):
        return Cond(
            substitute(node.cond, mapping, capturing),
            substitute(node.then, mapping, capturing),
            substitute(node.other, mapping, capturing),
            node.sort,
        )
    if isinstance(node, Lam):
        rows = substitute(node.rows, mapping, capturing)
        cols = substitute(node.cols, mapping, capturing)
        inner = {k: v for k, v in mapping.items() if k not in (node.i, node.j)}
        body_fv = free_vars(node.body)
        danger = set()
        for k, v in inner.items():
            if k in capturing or k not in body_fv or isinstance(v, (Rel, Not, And, Or, FormulaVar)):
                continue
            danger |= free_vars(v)
        i, j, body = node.i, node.j, node.body
        if i in danger or j in danger:
            avoid = set(danger) | all_names(node.body) | set(inner) | {i, j}
            for v in inner.values():
                avoid |= all_names(v)
            ni = fresh(i, avoid) if i in danger else i
            avoid.add(ni)
            nj = fresh(j, avoid) if j in danger else j
            body = substitute(body, {i: Var(ni, INDEX), j: Var(nj, INDEX)})
            i, j = ni, nj
        return Lam(i, j, rows, cols, substitute(body, inner, capturing))
    if isinstance(node, Rel):
        return Rel(node.op, substitute(node.left, mapping, capturing),
                   substitute(node.right, mapping, capturing))
    if isinstance(node, Not):
        return Not(substitute(node.arg, mapping, capturing))
    if isinstance(node, And):
        return And(substitute(node.left, mapping, capturing), substitute(node.right, mapping, capturing))
    if isinstance(node, Or):
        return Or(substitute(node.left, mapping, capturing), substitute(node.right, mapping, capturing))
    if isinstance(node, Sequent):
        return Sequent(
            tuple(substitute(f, mapping, capturing) for f in node.ante),
            tuple(substitute(f, mapping, capturing) for f in node.succ),
        )
    raise TypeError(f"cannot substitute into {node!r}")


# -- small constructors used across the package ---------------------------------------


def ivar(name: str) -> Var:
    return Var(name, INDEX)


def fvar(name: str) -> Var:
    return Var(name, FIELD)


def mvar(name: str) -> Var:
    return Var(name, MATRIX)


def iconst(v: int) -> Const:
    return Const(v, INDEX)


def fconst(v: int) -> Const:
    return Const(v, FIELD)


def eq(a: Term, b: Term) -> Rel:
    if a.sort != b.sort:
        raise TypeError(f"equation between {a.sort} and {b.sort}")
    return Rel("=", a, b)


def le(a: Term, b: Term) -> Rel:
    if a.sort != INDEX or b.sort != INDEX:
        raise TypeError("<= compares index terms")
    return Rel("<=", a, b)


def lt(a: Term, b: Term) -> Rel:
    return le(App("+", (a, iconst(1)), INDEX), b)
