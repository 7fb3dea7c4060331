"""The abbreviations of LAp as lambda terms.

``expand(t)`` rewrites one derived application into core syntax (which may
still contain ``max`` or ``dot``); ``expand_all`` repeats until none remain.
Binders are chosen fresh for the arguments, so ``p(i, A) * B`` inside
another lambda over ``i`` keeps its meaning.
"""

from __future__ import annotations

from .ast import (
    DERIVED_OPS,
    FIELD,
    INDEX,
    And,
    App,
    Cond,
    Const,
    Lam,
    Not,
    Or,
    Rel,
    Sequent,
    Var,
    all_names,
    children,
    fresh,
)


def _binders(args, *bases: str) -> list[str]:
    avoid: set = set()
    for a in args:
        avoid |= all_names(a)
    out = []
    for b in bases:
        name = fresh(b, avoid)
        avoid.add(name)
        out.append(name)
    return out


def _i(name: str) -> Var:
    return Var(name, INDEX)


def _e(A, i, j) -> App:
    return App("e", (A, i, j), FIELD)


def _r(A) -> App:
    return App("r", (A,), INDEX)


def _c(A) -> App:
    return App("c", (A,), INDEX)


def _max(a, b) -> App:
    return App("max", (a, b), INDEX)


def _plus1(t) -> App:
    return App("+", (t, Const(1, INDEX)), INDEX)


def _minus1(t) -> App:
    return App("-", (t, Const(1, INDEX)), INDEX)


def expand(t: App):
    """One rewriting step for a derived operator application."""
    op, args = t.op, t.args
    if op == "max":
        a, b = args
        return Cond(Rel("<=", a, b), b, a, INDEX)
    if op == "sum":
        A, B = args
        i, j = _binders(args, "i", "j")
        return Lam(i, j, _max(_r(A), _r(B)), _max(_c(A), _c(B)),
                   App("+", (_e(A, _i(i), _i(j)), _e(B, _i(i), _i(j))), FIELD))
    if op == "scalarmul":
        a, A = args
        i, j = _binders(args, "i", "j")
        return Lam(i, j, _r(A), _c(A), App("*", (a, _e(A, _i(i), _i(j))), FIELD))
    if op == "transpose":
        (A,) = args
        i, j = _binders(args, "i", "j")
        return Lam(i, j, _c(A), _r(A), _e(A, _i(j), _i(i)))
    if op == "zero":
        k, l = args
        i, j = _binders(args, "i", "j")
        return Lam(i, j, k, l, Const(0, FIELD))
    if op == "identity":
        (k,) = args
        i, j = _binders(args, "i", "j")
        return Lam(i, j, k, k, Cond(Rel("=", _i(i), _i(j)), Const(1, FIELD), Const(0, FIELD), FIELD))
    if op == "trace":
        (A,) = args
        i, j = _binders(args, "i", "j")
        return App("Sigma", (Lam(i, j, _r(A), Const(1, INDEX), _e(A, _i(i), _i(i))),), FIELD)
    if op == "dot":
        A, B = args
        i, j = _binders(args, "i", "j")
        return App("Sigma", (Lam(i, j, _max(_r(A), _r(B)), _max(_c(A), _c(B)),
                                 App("*", (_e(A, _i(i), _i(j)), _e(B, _i(i), _i(j))), FIELD)),),
                   FIELD)
    if op == "matmul":
        A, B = args
        i, j, k, l = _binders(args, "i", "j", "k", "l")
        row = Lam(k, l, _c(A), Const(1, INDEX), _e(A, _i(i), _i(k)))
        col = Lam(k, l, _r(B), Const(1, INDEX), _e(B, _i(k), _i(j)))
        return Lam(i, j, _r(A), _c(B), App("dot", (row, col), FIELD))
    if op == "R":
        (A,) = args
        i, j = _binders(args, "i", "j")
        return Lam(i, j, Const(1, INDEX), _minus1(_c(A)), _e(A, Const(1, INDEX), _plus1(_i(j))))
    if op == "S":
        (A,) = args
        i, j = _binders(args, "i", "j")
        return Lam(i, j, _minus1(_r(A)), Const(1, INDEX), _e(A, _plus1(_i(i)), Const(1, INDEX)))
    if op == "M":
        (A,) = args
        i, j = _binders(args, "i", "j")
        return Lam(i, j, _minus1(_r(A)), _minus1(_c(A)), _e(A, _plus1(_i(i)), _plus1(_i(j))))
    raise ValueError(f"{op!r} is not a derived operator")


def expand_all(node):
    """Rewrite every abbreviation, innermost arguments first."""
    if isinstance(node, App):
        args = tuple(expand_all(a) for a in node.args)
        t = App(node.op, args, node.sort)
        if t.op in DERIVED_OPS:
            return expand_all(expand(t))
        return t
    if isinstance(node, Lam):
        return Lam(node.i, node.j, expand_all(node.rows), expand_all(node.cols), expand_all(node.body))
    if isinstance(node, Cond):
        return Cond(expand_all(node.cond), expand_all(node.then), expand_all(node.other), node.sort)
    if not children(node):
        return node
    if isinstance(node, Rel):
        return Rel(node.op, expand_all(node.left), expand_all(node.right))
    if isinstance(node, Not):
        return Not(expand_all(node.arg))
    if isinstance(node, And):
        return And(expand_all(node.left), expand_all(node.right))
    if isinstance(node, Or):
        return Or(expand_all(node.left), expand_all(node.right))
    if isinstance(node, Sequent):
        return Sequent(tuple(expand_all(f) for f in node.ante), tuple(expand_all(f) for f in node.succ))
    raise TypeError(f"cannot expand {node!r}")


def is_core(node) -> bool:
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, App) and n.op in DERIVED_OPS:
            return False
        stack.extend(children(n))
    return True

