"""Concrete syntax for LAp: parser and printer.

The grammar is documented in ``docs/grammar.md``.  In brief::

    sequent  :=  [formula {"," formula}] "|-" [formula {"," formula}]
    formula  :=  conj {"|" conj}
    conj     :=  unary {"&" unary}
    unary    :=  "!" unary | "(" formula ")" | term rel term | NAME
    rel      :=  "=" | "!=" | "<=" | "<"
    term     :=  addend {("+" | "-") addend}
    addend   :=  factor {"*" factor}
    factor   :=  "-" factor | primary
    primary  :=  NUM | NAME | NAME "(" args ")" | "(" term [":" SORT] ")"
              |  "lambda" NAME NAME "<" term "," term "," term ">"
              |  "cond" "(" formula "," term "," term ")"

Parsing happens in two passes.  The first builds an untyped tree with source
spans; the second assigns sorts.  Variables are sorted by their name (see
:func:`~lapinterp.lap.ast.sort_of_name`).  The overloaded ``+ * -`` and bare
numerals take their sort from the surrounding position, and where nothing
decides (``0 = 1``) the index sort wins.  ``(t : field)`` overrides that.

A bare name in formula position is a formula variable; the axiom schemata
for ``cond`` use ``alpha``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .ast import (
    FIELD,
    INDEX,
    MATRIX,
    NAMED_FUNCTIONS,
    SIGNATURES,
    SORTS,
    And,
    App,
    Cond,
    Const,
    FormulaVar,
    Lam,
    Not,
    Or,
    Rel,
    Sequent,
    Var,
    free_vars,
    is_index_only,
    sort_of_name,
)


class LapSyntaxError(ValueError):
    def __init__(self, message: str, src: str = "", pos: int = 0):
        self.line, self.column = _line_col(src, pos)
        self.bare = message
        super().__init__(f"{self.line}:{self.column}: {message}")


class LapSortError(LapSyntaxError):
    """A well-formed expression whose sorts do not fit."""


def _line_col(src: str, pos: int) -> tuple[int, int]:
    line = src.count("\n", 0, pos) + 1
    col = pos - (src.rfind("\n", 0, pos) + 1) + 1
    return line, col


# -- tokens ----------------------------------------------------------------------------

_TOKEN = re.compile(
    r"""\s*(?:
        (?P<num>\d+)
      | (?P<name>[A-Za-z_][A-Za-z0-9_']*)
      | (?P<sym>\|-|→|<=|!=|[()<>,+*\-!&|:=λ])
    )""",
    re.VERBOSE,
)

_KEYWORDS = {"lambda", "cond"}


@dataclass(frozen=True)
class Tok:
    kind: str  # num, name, sym, eof
    text: str
    start: int
    end: int


def tokenize(src: str) -> list[Tok]:
    out = []
    pos = 0
    n = len(src)
    while True:
        while pos < n and src[pos].isspace():
            pos += 1
        if pos >= n:
            break
        if src[pos] == "#":  # comment to end of line
            nl = src.find("\n", pos)
            pos = n if nl < 0 else nl
            continue
        m = _TOKEN.match(src, pos)
        if m is None or m.end() == pos:
            raise LapSyntaxError(f"unexpected character {src[pos]!r}", src, pos)
        kind = m.lastgroup
        text = m.group(kind)
        start = m.start(kind)
        if text == "→":
            text = "|-"
        if text == "λ":
            kind, text = "name", "lambda"
        out.append(Tok(kind, text, start, m.end()))
        pos = m.end()
    out.append(Tok("eof", "", n, n))
    return out


# -- untyped trees ----------------------------------------------------------------------


@dataclass
class R:
    """Untyped node: ``kind`` plus payload, with the source span."""

    kind: str
    data: tuple
    start: int
    end: int


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0

    # token helpers
    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, text: str) -> bool:
        t = self.tok
        return t.kind in ("sym", "name") and t.text == text

    def take(self, text: str | None = None, kind: str | None = None) -> Tok:
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = repr(text) if text is not None else kind
            got = "end of input" if t.kind == "eof" else repr(t.text)
            raise LapSyntaxError(f"expected {want}, found {got}", self.src, t.start)
        self.i += 1
        return t

    def error(self, msg: str) -> LapSyntaxError:
        return LapSyntaxError(msg, self.src, self.tok.start)

    # sequents and formulas
    def sequent(self) -> R:
        start = self.tok.start
        ante = [] if self.at("|-") else self.formula_list()
        self.take("|-")
        succ = [] if self.tok.kind == "eof" else self.formula_list()
        return R("seq", (ante, succ), start, self.toks[self.i - 1].end)

    def formula_list(self) -> list:
        out = [self.formula()]
        while self.at(","):
            self.take(",")
            out.append(self.formula())
        return out

    def formula(self) -> R:
        left = self.conj()
        while self.at("|"):
            self.take("|")
            right = self.conj()
            left = R("or", (left, right), left.start, right.end)
        return left

    def conj(self) -> R:
        left = self.unary()
        while self.at("&"):
            self.take("&")
            right = self.unary()
            left = R("and", (left, right), left.start, right.end)
        return left

    def unary(self) -> R:
        if self.at("!"):
            t = self.take("!")
            arg = self.unary()
            return R("not", (arg,), t.start, arg.end)
        save = self.i
        try:
            return self.relation()
        except LapSyntaxError as first:
            if not self.at_index(save, "("):
                raise
            self.i = save
            t = self.take("(")
            try:
                inner = self.formula()
                self.take(")")
            except LapSyntaxError:
                raise first from None
            return R(inner.kind, inner.data, t.start, self.toks[self.i - 1].end)

    def at_index(self, i: int, text: str) -> bool:
        return self.toks[i].text == text and self.toks[i].kind == "sym"

    def relation(self) -> R:
        left = self.term()
        t = self.tok
        if t.kind == "sym" and t.text in ("=", "!=", "<=", "<"):
            self.i += 1
            right = self.term()
            return R("rel", (t.text, left, right), left.start, right.end)
        if left.kind == "name":
            return R("fvar", (left.data[0],), left.start, left.end)
        raise self.error("expected a relation (=, !=, <=, <)")

    # terms
    def term(self) -> R:
        left = self.addend()
        while self.tok.kind == "sym" and self.tok.text in ("+", "-"):
            op = self.take().text
            right = self.addend()
            left = R("bin", (op, left, right), left.start, right.end)
        return left

    def addend(self) -> R:
        left = self.factor()
        while self.at("*"):
            self.take("*")
            right = self.factor()
            left = R("bin", ("*", left, right), left.start, right.end)
        return left

    def factor(self) -> R:
        if self.at("-"):
            t = self.take("-")
            arg = self.factor()
            return R("neg", (arg,), t.start, arg.end)
        return self.primary()

    def primary(self) -> R:
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return R("num", (int(t.text),), t.start, t.end)
        if t.kind == "sym" and t.text == "(":
            self.i += 1
            inner = self.term()
            if self.at(":"):
                self.take(":")
                s = self.take(kind="name")
                if s.text not in SORTS:
                    raise LapSyntaxError(f"unknown sort {s.text!r}", self.src, s.start)
                end = self.take(")").end
                return R("asc", (inner, s.text), t.start, end)
            end = self.take(")").end
            return R(inner.kind, inner.data, t.start, end)
        if t.kind == "name" and t.text == "lambda":
            self.i += 1
            i = self.take(kind="name")
            j = self.take(kind="name")
            for b in (i, j):
                if b.text in _KEYWORDS or sort_of_name(b.text) != INDEX:
                    raise LapSyntaxError(
                        f"lambda binder {b.text!r} must be an index variable name", self.src, b.start
                    )
            if i.text == j.text:
                raise LapSyntaxError("lambda binders must differ", self.src, j.start)
            self.take("<")
            m = self.term()
            self.take(",")
            n = self.term()
            self.take(",")
            body = self.term()
            end = self.take(">").end
            return R("lam", (i.text, j.text, m, n, body), t.start, end)
        if t.kind == "name" and t.text == "cond":
            self.i += 1
            self.take("(")
            phi = self.formula()
            self.take(",")
            a = self.term()
            self.take(",")
            b = self.term()
            end = self.take(")").end
            return R("cond", (phi, a, b), t.start, end)
        if t.kind == "name":
            self.i += 1
            if self.at("("):
                self.take("(")
                args = [] if self.at(")") else self.term_list()
                end = self.take(")").end
                return R("call", (t.text, args), t.start, end)
            return R("name", (t.text,), t.start, t.end)
        got = "end of input" if t.kind == "eof" else repr(t.text)
        raise self.error(f"expected a term, found {got}")

    def term_list(self) -> list:
        out = [self.term()]
        while self.at(","):
            self.take(",")
            out.append(self.term())
        return out

    def finish(self) -> None:
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")


# -- sort assignment --------------------------------------------------------------------


class _Typer:
    def __init__(self, src: str):
        self.src = src

    def fail(self, node: R, msg: str) -> LapSortError:
        text = self.src[node.start : node.end]
        return LapSortError(f"{msg} in {text!r}", self.src, node.start)

    def guess(self, node: R) -> str | None:
        k = node.kind
        if k == "num":
            return None
        if k == "name":
            return sort_of_name(node.data[0])
        if k == "call":
            name = node.data[0]
            if name == "sum":
                return MATRIX
            return NAMED_FUNCTIONS.get(name)
        if k == "bin":
            op, l, r = node.data
            gl, gr = self.guess(l), self.guess(r)
            if MATRIX in (gl, gr):
                return MATRIX
            return gl or gr
        if k == "neg":
            return FIELD
        if k == "lam":
            return MATRIX
        if k == "cond":
            return self.guess(node.data[1]) or self.guess(node.data[2])
        if k == "asc":
            return node.data[1]
        raise self.fail(node, "expected a term")

    def term(self, node: R, want: str):
        k = node.kind
        if k == "num":
            v = node.data[0]
            if want == MATRIX:
                raise self.fail(node, "a numeral cannot be a matrix")
            if want == FIELD and v > 1:
                raise self.fail(node, "field constants are 0 and 1")
            return Const(v, want)
        if k == "name":
            name = node.data[0]
            if name in _KEYWORDS:
                raise self.fail(node, f"keyword {name!r} used as a variable")
            s = sort_of_name(name)
            if s != want:
                raise self.fail(node, f"{name} is a {s} variable, expected {want}")
            return Var(name, s)
        if k == "asc":
            inner, s = node.data
            if s != want:
                raise self.fail(node, f"annotated {s} where {want} is expected")
            return self.term(inner, s)
        if k == "neg":
            if want != FIELD:
                raise self.fail(node, f"unary minus is a field operation, expected {want}")
            return App("neg", (self.term(node.data[0], FIELD),), FIELD)
        if k == "bin":
            op, l, r = node.data
            if want == MATRIX:
                if op == "+":
                    return App("sum", (self.term(l, MATRIX), self.term(r, MATRIX)), MATRIX)
                if op == "*":
                    if self.guess(l) == FIELD:
                        return App("scalarmul", (self.term(l, FIELD), self.term(r, MATRIX)), MATRIX)
                    return App("matmul", (self.term(l, MATRIX), self.term(r, MATRIX)), MATRIX)
                raise self.fail(node, "no matrix subtraction")
            return App(op, (self.term(l, want), self.term(r, want)), want)
        if k == "call":
            name, args = node.data
            op = name
            result = NAMED_FUNCTIONS.get(name)
            if name == "sum":
                result = MATRIX
            if result is None:
                raise self.fail(node, f"unknown function {name!r}")
            if result != want:
                raise self.fail(node, f"{name} returns {result}, expected {want}")
            sig = SIGNATURES[(op, result)]
            if len(args) != len(sig):
                raise self.fail(node, f"{name} takes {len(sig)} argument(s), got {len(args)}")
            return App(op, tuple(self.term(a, s) for a, s in zip(args, sig)), result)
        if k == "lam":
            if want != MATRIX:
                raise self.fail(node, f"lambda term is a matrix, expected {want}")
            i, j, m, n, body = node.data
            rows, cols = self.term(m, INDEX), self.term(n, INDEX)
            clash = (free_vars(rows) | free_vars(cols)) & {i, j}
            if clash:
                raise self.fail(node, f"binder {sorted(clash)[0]} occurs free in a dimension")
            return Lam(i, j, rows, cols, self.term(body, FIELD))
        if k == "cond":
            if want == MATRIX:
                raise self.fail(node, "cond takes index or field branches")
            phi, a, b = node.data
            alpha = self.formula(phi)
            if not is_index_only(alpha):
                raise self.fail(phi, "cond conditions may only compare index terms")
            return Cond(alpha, self.term(a, want), self.term(b, want), want)
        raise self.fail(node, "expected a term")

    def top_term(self, node: R):
        return self.term(node, self.guess(node) or INDEX)

    def formula(self, node: R):
        k = node.kind
        if k == "rel":
            op, l, r = node.data
            if op in ("<=", "<"):
                li, ri = self.term(l, INDEX), self.term(r, INDEX)
                if op == "<":
                    li = App("+", (li, Const(1, INDEX)), INDEX)
                return Rel("<=", li, ri)
            gl, gr = self.guess(l), self.guess(r)
            if gl and gr and gl != gr:
                raise self.fail(node, f"equation between {gl} and {gr}")
            s = gl or gr or INDEX
            atom = Rel("=", self.term(l, s), self.term(r, s))
            return Not(atom) if op == "!=" else atom
        if k == "not":
            return Not(self.formula(node.data[0]))
        if k == "and":
            return And(self.formula(node.data[0]), self.formula(node.data[1]))
        if k == "or":
            return Or(self.formula(node.data[0]), self.formula(node.data[1]))
        if k == "fvar":
            return FormulaVar(node.data[0])
        raise self.fail(node, "expected a formula")

    def sequent(self, node: R) -> Sequent:
        ante, succ = node.data
        return Sequent(tuple(self.formula(f) for f in ante), tuple(self.formula(f) for f in succ))


def parse_term(src: str):
    p = _Parser(src)
    node = p.term()
    p.finish()
    return _Typer(src).top_term(node)


def parse_formula(src: str):
    p = _Parser(src)
    node = p.formula()
    p.finish()
    return _Typer(src).formula(node)


def parse_sequent(src: str) -> Sequent:
    p = _Parser(src)
    node = p.sequent()
    p.finish()
    return _Typer(src).sequent(node)


def parse(src: str):
    """Parse a sequent, formula or term, whichever the text is."""
    toks = tokenize(src)
    if any(t.kind == "sym" and t.text == "|-" for t in toks):
        return parse_sequent(src)
    try:
        return parse_formula(src)
    except LapSyntaxError as err:
        try:
            return parse_term(src)
        except LapSortError:
            raise
        except LapSyntaxError as err2:
            raise max(err, err2, key=lambda e: (e.line, e.column)) from None


# -- printing ----------------------------------------------------------------------------

_INFIX = {"+": "+", "*": "*", "-": "-", "sum": "+", "matmul": "*", "scalarmul": "*"}
_PRINTED_NAME = {"sum": "sum"}


def _guess_typed(t) -> str | None:
    """What the parser would guess for the printed form of ``t``."""
    if isinstance(t, Const):
        return None
    if isinstance(t, Var) or isinstance(t, Lam):
        return t.sort
    if isinstance(t, Cond):
        return _guess_typed(t.then) or _guess_typed(t.other)
    if isinstance(t, App):
        if t.op in ("+", "*", "-"):
            return _guess_typed(t.args[0]) or _guess_typed(t.args[1])
        return t.sort
    raise TypeError(t)


def _is_compound(t) -> bool:
    return isinstance(t, App) and (t.op in _INFIX or t.op == "neg")


def show(node) -> str:
    """Print a term, formula or sequent so that parsing gives it back."""
    if isinstance(node, Sequent):
        ante = ", ".join(_show_formula(f) for f in node.ante)
        succ = ", ".join(_show_formula(f) for f in node.succ)
        return f"{ante} |- {succ}".strip() if ante else f"|- {succ}".rstrip()
    if isinstance(node, (Rel, Not, And, Or, FormulaVar)):
        return _show_formula(node)
    return _show_top(node)


def _show_top(t) -> str:
    if _guess_typed(t) is None and t.sort != INDEX:
        return f"({_show_term(t)} : {t.sort})"
    return _show_term(t)


def _show_sub(t) -> str:
    s = _show_term(t)
    return f"({s})" if _is_compound(t) else s


def _show_term(t) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, Lam):
        return (
            f"lambda {t.i} {t.j} <{_show_term(t.rows)}, {_show_term(t.cols)}, "
            f"{_show_term(t.body)}>"
        )
    if isinstance(t, Cond):
        return f"cond({_show_formula(t.cond)}, {_show_term(t.then)}, {_show_term(t.other)})"
    if isinstance(t, App):
        if t.op == "neg":
            return f"-{_show_sub(t.args[0])}"
        if t.op in _INFIX:
            left, right = t.args
            ls = _show_sub(left)
            if t.op == "scalarmul" and _guess_typed(left) is None:
                ls = f"({_show_term(left)} : field)"
            return f"{ls} {_INFIX[t.op]} {_show_sub(right)}"
        return f"{t.op}({', '.join(_show_term(a) for a in t.args)})"
    raise TypeError(f"not a term: {t!r}")


def _show_formula(f) -> str:
    if isinstance(f, Rel):
        left, right = f.left, f.right
        ls = _show_term(left)
        if f.op == "=" and left.sort != INDEX and _guess_typed(left) is None and _guess_typed(right) is None:
            ls = f"({ls} : {left.sort})"
        return f"{ls} {f.op} {_show_term(right)}"
    if isinstance(f, FormulaVar):
        return f.name
    if isinstance(f, Not):
        inner = _show_formula(f.arg)
        return f"!{inner}" if isinstance(f.arg, FormulaVar) else f"!({inner})"
    if isinstance(f, (And, Or)):
        sym = " & " if isinstance(f, And) else " | "

        def side(g, left: bool):
            s = _show_formula(g)
            # the grammar folds to the left, so a same-connective left child needs no parens
            if isinstance(g, (And, Or)) and not (left and type(g) is type(f)):
                return f"({s})"
            return s

        return side(f.left, True) + sym + side(f.right, False)
    raise TypeError(f"not a formula: {f!r}")
