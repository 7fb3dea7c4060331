"""S-expression surface syntax for two-sorted formulas.

Grammar (``x`` lowercase number variable, ``X`` uppercase string variable)::

    num     ::= INT | x | (+ num num) | (* num num) | (len str)
              | (f arg...)                  ; registered number function
              | (condn form num num)
    str     ::= X | (F arg...)              ; registered string function
              | (conds form str str)
              | (lam2 i j num num form) | (lamz i j num num str)
    form    ::= true | false | (= num num) | (<= num num) | (< num num)
              | (in str num) | (=2 str str) | (P arg...)
              | (not form) | (and form...) | (or form...)
              | (-> form form) | (<-> form form) | (xor form form)
              | (forall (x < num) form) | (forall (x <= num) form) | (forall x form)
              | (exists ...)                ; same shapes
              | (exists (X <= num) form) | (exists (X <= num) :witness str form)

``and``/``or`` with more than two arguments fold to the left; ``->``, ``<->``
and ``xor`` are expanded into not/and/or on reading.  ``;`` starts a comment.
"""

from __future__ import annotations

import re

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
    disj,
    iff,
    implies,
    is_string_var,
    xor,
)


class SexprError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(;[^\n]*)|(\()|(\))|([^\s()]+))")


def read(text: str):
    """Tokenize and read one or more S-expressions into nested lists."""
    pos = 0
    stack: list[list] = [[]]
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        pos = m.end()
        comment, lpar, rpar, atom = m.groups()
        if comment:
            continue
        if lpar:
            stack.append([])
        elif rpar:
            if len(stack) == 1:
                raise SexprError(f"unbalanced ')' at offset {m.start(3)}")
            done = stack.pop()
            stack[-1].append(done)
        elif atom:
            stack[-1].append(atom)
    if text[pos:].strip():
        raise SexprError(f"unexpected input at offset {pos}")
    if len(stack) != 1:
        raise SexprError("unbalanced '('")
    return stack[0]


class Reader:
    def __init__(self, registry):
        self.registry = registry

    def formula(self, s):
        if isinstance(s, str):
            if s == "true":
                return Top()
            if s == "false":
                return Bot()
            raise SexprError(f"expected a formula, got {s!r}")
        if not s:
            raise SexprError("empty list where a formula was expected")
        head, *rest = s
        if not isinstance(head, str):
            raise SexprError(f"bad formula head {head!r}")
        if head == "=":
            a, b = self._n_args(rest, 2, head)
            return Eq1(self.num(a), self.num(b))
        if head == "<=":
            a, b = self._n_args(rest, 2, head)
            return Le(self.num(a), self.num(b))
        if head == "<":
            a, b = self._n_args(rest, 2, head)
            return Lt(self.num(a), self.num(b))
        if head == "=2":
            a, b = self._n_args(rest, 2, head)
            return Eq2(self.string(a), self.string(b))
        if head == "in":
            a, b = self._n_args(rest, 2, head)
            return Mem(self.string(a), self.num(b))
        if head == "not":
            (a,) = self._n_args(rest, 1, head)
            return Not(self.formula(a))
        if head == "and":
            return conj(*[self.formula(x) for x in rest])
        if head == "or":
            return disj(*[self.formula(x) for x in rest])
        if head == "->":
            a, b = self._n_args(rest, 2, head)
            return implies(self.formula(a), self.formula(b))
        if head == "<->":
            a, b = self._n_args(rest, 2, head)
            return iff(self.formula(a), self.formula(b))
        if head == "xor":
            a, b = self._n_args(rest, 2, head)
            return xor(self.formula(a), self.formula(b))
        if head in ("forall", "exists"):
            return self._quant(head, rest)
        sym = self.registry.get(head)
        if sym is None or sym.kind != "pred":
            raise SexprError(f"unknown predicate {head!r}")
        return PApp(head, self._args(sym, rest))

    def _quant(self, kind, rest):
        if len(rest) < 2:
            raise SexprError(f"{kind} needs a binder and a body")
        binder = rest[0]
        witness = None
        body = rest[-1]
        extra = rest[1:-1]
        if extra:
            if len(extra) != 2 or extra[0] != ":witness":
                raise SexprError(f"unexpected tokens in {kind}: {extra!r}")
            witness = self.string(extra[1])
        if isinstance(binder, str):
            var, rel, bound = binder, None, None
        else:
            if len(binder) != 3 or binder[1] not in ("<", "<="):
                raise SexprError(f"bad binder {binder!r}")
            var, rel, bound = binder[0], binder[1], self.num(binder[2])
        if is_string_var(var):
            if rel == "<":
                raise SexprError("string quantifiers are bounded with <=")
            return StrQ(kind, var, bound, self.formula(body), witness)
        if witness is not None:
            raise SexprError("witness hints only apply to string quantifiers")
        return NumQ(kind, var, rel, bound, self.formula(body))

    def num(self, s):
        if isinstance(s, str):
            if re.fullmatch(r"\d+", s):
                return Num(int(s))
            if is_string_var(s):
                raise SexprError(f"string variable {s!r} used as a number")
            return NVar(s)
        if not s:
            raise SexprError("empty number term")
        head, *rest = s
        if head == "+":
            a, b = self._n_args(rest, 2, head)
            return Add(self.num(a), self.num(b))
        if head == "*":
            a, b = self._n_args(rest, 2, head)
            return Mul(self.num(a), self.num(b))
        if head == "len":
            (a,) = self._n_args(rest, 1, head)
            return Len(self.string(a))
        if head == "condn":
            c, a, b = self._n_args(rest, 3, head)
            return CondNum(self.formula(c), self.num(a), self.num(b))
        sym = self.registry.get(head)
        if sym is None or sym.kind != "num":
            raise SexprError(f"unknown number function {head!r}")
        return NApp(head, self._args(sym, rest))

    def string(self, s):
        if isinstance(s, str):
            if not is_string_var(s):
                raise SexprError(f"number {s!r} used as a string")
            return SVar(s)
        if not s:
            raise SexprError("empty string term")
        head, *rest = s
        if head == "conds":
            c, a, b = self._n_args(rest, 3, head)
            return CondStr(self.formula(c), self.string(a), self.string(b))
        if head in ("lam2", "lamz"):
            i, j, x, y, body = self._n_args(rest, 5, head)
            if head == "lam2":
                return LamBits(i, j, self.num(x), self.num(y), self.formula(body))
            return LamCells(i, j, self.num(x), self.num(y), self.string(body))
        sym = self.registry.get(head)
        if sym is None or sym.kind != "str":
            raise SexprError(f"unknown string function {head!r}")
        return SApp(head, self._args(sym, rest))

    def _args(self, sym, rest):
        nn, ns = sym.arity
        if len(rest) != nn + ns:
            raise SexprError(f"{sym.name} takes {nn} number and {ns} string arguments")
        return tuple(self.num(a) for a in rest[:nn]) + tuple(self.string(a) for a in rest[nn:])

    @staticmethod
    def _n_args(rest, n, head):
        if len(rest) != n:
            raise SexprError(f"{head} takes {n} arguments, got {len(rest)}")
        return rest


def parse_formula(text: str, registry):
    items = read(text)
    if len(items) != 1:
        raise SexprError(f"expected one formula, found {len(items)}")
    return Reader(registry).formula(items[0])


def parse_formulas(text: str, registry) -> list:
    reader = Reader(registry)
    return [reader.formula(x) for x in read(text)]


def parse_num(text: str, registry):
    (item,) = read(text)
    return Reader(registry).num(item)


def parse_string_term(text: str, registry):
    (item,) = read(text)
    return Reader(registry).string(item)


def show(node) -> str:
    """Print a term or formula; :func:`parse_formula` reads it back to the same tree."""
    if isinstance(node, NVar) or isinstance(node, SVar):
        return node.name
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Top):
        return "true"
    if isinstance(node, Bot):
        return "false"
    if isinstance(node, Add):
        return f"(+ {show(node.left)} {show(node.right)})"
    if isinstance(node, Mul):
        return f"(* {show(node.left)} {show(node.right)})"
    if isinstance(node, Len):
        return f"(len {show(node.arg)})"
    if isinstance(node, (NApp, SApp)):
        return "(" + " ".join([node.fn, *[show(a) for a in node.args]]) + ")"
    if isinstance(node, PApp):
        return "(" + " ".join([node.pred, *[show(a) for a in node.args]]) + ")"
    if isinstance(node, CondNum):
        return f"(condn {show(node.cond)} {show(node.then)} {show(node.other)})"
    if isinstance(node, CondStr):
        return f"(conds {show(node.cond)} {show(node.then)} {show(node.other)})"
    if isinstance(node, LamBits):
        return f"(lam2 {node.i} {node.j} {show(node.rows)} {show(node.cols)} {show(node.body)})"
    if isinstance(node, LamCells):
        return f"(lamz {node.i} {node.j} {show(node.rows)} {show(node.cols)} {show(node.body)})"
    if isinstance(node, Eq1):
        return f"(= {show(node.left)} {show(node.right)})"
    if isinstance(node, Le):
        return f"(<= {show(node.left)} {show(node.right)})"
    if isinstance(node, Lt):
        return f"(< {show(node.left)} {show(node.right)})"
    if isinstance(node, Eq2):
        return f"(=2 {show(node.left)} {show(node.right)})"
    if isinstance(node, Mem):
        return f"(in {show(node.string)} {show(node.index)})"
    if isinstance(node, Not):
        return f"(not {show(node.arg)})"
    if isinstance(node, And):
        return f"(and {show(node.left)} {show(node.right)})"
    if isinstance(node, Or):
        return f"(or {show(node.left)} {show(node.right)})"
    if isinstance(node, NumQ):
        binder = node.var if node.rel is None else f"({node.var} {node.rel} {show(node.bound)})"
        return f"({node.kind} {binder} {show(node.body)})"
    if isinstance(node, StrQ):
        binder = node.var if node.bound is None else f"({node.var} <= {show(node.bound)})"
        hint = "" if node.witness is None else f" :witness {show(node.witness)}"
        return f"({node.kind} {binder}{hint} {show(node.body)})"
    raise TypeError(f"cannot print {node!r}")
