"""Line-by-line checking of LAp proofs.

A proof file has one step per line::

    label: <sequent> by <justification>

Blank lines and lines starting with ``#`` are ignored.  Justifications:

``init``                      the LK initial sequent ``phi |- phi``
``A36(n := 0; A := B)``       an instance of a nonlogical axiom; metavariables
                              not mentioned stay as they are
``weakL(k)`` ``weakR(k)``     weakening
``contrL(k)`` ``contrR(k)``   contraction
``exchL(k)`` ``exchR(k)``     exchange
``andL(k)`` ``andR(k, l)``    conjunction
``orL(k, l)`` ``orR(k)``      disjunction
``notL(k)`` ``notR(k)``       negation
``cut(k, l)``                 cut, with shared or with separate contexts
``ind(k; i; n)``              induction on ``i`` up to the index term ``n``
``meq(k, l, m)``              matrix equality from premises S1, S2, S3

Both sides of a sequent are compared as multisets, so exchange is implicit
in every rule and ``exchL``/``exchR`` only check that nothing else changed.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .ast import INDEX, App, Const, Rel, Sequent, Var, And, Or, Not, free_vars, substitute
from .axioms import AXIOMS, AxiomError, instantiate
from .parser import LapSyntaxError, parse_formula, parse_sequent, parse_term, show


@dataclass
class LineResult:
    label: str
    lineno: int
    ok: bool
    reason: str = ""


@dataclass
class ProofReport:
    lines: list = field(default_factory=list)
    conclusion: Sequent | None = None

    @property
    def accepted(self) -> bool:
        return bool(self.lines) and all(r.ok for r in self.lines)

    @property
    def first_error(self) -> LineResult | None:
        return next((r for r in self.lines if not r.ok), None)

    def describe(self) -> str:
        if self.accepted:
            return f"accepted: {len(self.lines)} lines, proves {show(self.conclusion)}"
        if not self.lines:
            return "rejected: the proof has no lines"
        bad = self.first_error
        return f"rejected at line {bad.lineno} (step {bad.label}): {bad.reason}"


@dataclass(frozen=True)
class Step:
    label: str
    lineno: int
    sequent: Sequent
    rule: str
    args: tuple  # groups separated by ';', each a raw string


class RuleError(Exception):
    pass


_LINE = re.compile(r"^\s*([A-Za-z0-9_.]+)\s*:\s*(.*?)\s+by\s+(.+?)\s*$")
_JUST = re.compile(r"^([A-Za-z][A-Za-z0-9_.]*)\s*(?:\((.*)\))?$")


def _parse_line(text: str, lineno: int) -> Step:
    m = _LINE.match(text)
    if not m:
        raise RuleError("expected 'label: sequent by justification'")
    label, seq_text, just = m.groups()
    try:
        seq = parse_sequent(seq_text)
    except LapSyntaxError as err:
        raise RuleError(f"cannot parse the sequent: {err}") from None
    jm = _JUST.match(just)
    if not jm:
        raise RuleError(f"cannot parse the justification {just!r}")
    rule, inner = jm.groups()
    groups = tuple(g.strip() for g in inner.split(";")) if inner is not None else ()
    return Step(label, lineno, seq, rule, groups)


def _ms(xs) -> Counter:
    return Counter(xs)


def _same(a: Counter, b: Counter) -> bool:
    return +a == +b


def _minus(c: Counter, x) -> Counter | None:
    if c[x] <= 0:
        return None
    out = Counter(c)
    out[x] -= 1
    if not out[x]:
        del out[x]
    return out


def _plus(c: Counter, *xs) -> Counter:
    out = Counter(c)
    for x in xs:
        out[x] += 1
    return out


class ProofChecker:
    def __init__(self):
        self.steps: dict[str, Step] = {}

    # -- entry ----------------------------------------------------------------
    def check_text(self, text: str) -> ProofReport:
        report = ProofReport()
        self.steps = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            label = line.split(":", 1)[0].strip() or "?"
            try:
                step = _parse_line(line, lineno)
                label = step.label
                if label in self.steps:
                    raise RuleError(f"label {label!r} is already used")
                self._check(step)
            except (RuleError, LapSyntaxError, TypeError, ValueError) as err:
                report.lines.append(LineResult(label, lineno, False, str(err)))
                continue
            self.steps[label] = step
            report.lines.append(LineResult(label, lineno, True))
            report.conclusion = step.sequent
        return report

    # -- helpers --------------------------------------------------------------
    def _premises(self, step: Step, count: int | None = None) -> list[Sequent]:
        if not step.args or not step.args[0]:
            labels = []
        else:
            labels = [x.strip() for x in step.args[0].split(",")]
        if count is not None and len(labels) != count:
            raise RuleError(f"{step.rule} takes {count} premise(s), got {len(labels)}")
        out = []
        for lab in labels:
            if lab not in self.steps:
                raise RuleError(f"premise {lab!r} is not an earlier, accepted line")
            out.append(self.steps[lab].sequent)
        return out

    def _check(self, step: Step) -> None:
        rule = step.rule
        if rule in AXIOMS or rule == "A21":
            return self._axiom(step)
        handler = getattr(self, f"_rule_{rule}", None)
        if handler is None:
            raise RuleError(f"unknown rule or axiom {rule!r}")
        handler(step)

    # -- axioms ---------------------------------------------------------------
    def _rule_init(self, step: Step) -> None:
        s = step.sequent
        if len(s.ante) != 1 or s.ante != s.succ:
            raise RuleError("an initial sequent must be 'phi |- phi'")

    def _axiom(self, step: Step) -> None:
        subst = {}
        for group in step.args:
            if not group:
                continue
            if ":=" not in group:
                raise RuleError(f"axiom substitutions look like 'x := term', got {group!r}")
            name, text = (x.strip() for x in group.split(":=", 1))
            try:
                value = parse_formula(text) if name == "alpha" else parse_term(text)
            except LapSyntaxError as err:
                raise RuleError(f"cannot parse the replacement for {name}: {err}") from None
            subst[name] = value
        try:
            want = instantiate(step.rule, subst)
        except AxiomError as err:
            raise RuleError(str(err)) from None
        s = step.sequent
        if not (_same(_ms(s.ante), _ms(want.ante)) and _same(_ms(s.succ), _ms(want.succ))):
            raise RuleError(f"not the instance of {step.rule}; expected {show(want)}")

    # -- structural rules -----------------------------------------------------
    def _side_rule(self, step: Step, side: str, kind: str) -> None:
        (p,) = self._premises(step, 1)
        s = step.sequent
        other = "succ" if side == "ante" else "ante"
        if not _same(_ms(getattr(p, other)), _ms(getattr(s, other))):
            raise RuleError(f"{step.rule} may only change the {'left' if side == 'ante' else 'right'} side")
        prem, concl = _ms(getattr(p, side)), _ms(getattr(s, side))
        if kind == "exch":
            ok = _same(prem, concl)
        elif kind == "weak":
            ok = any(_same(_plus(prem, x), concl) for x in concl)
        else:  # contraction
            ok = any(_same(_plus(concl, x), prem) for x in concl)
        if not ok:
            raise RuleError(f"conclusion is not a {kind} of the premise")

    def _rule_weakL(self, step):
        self._side_rule(step, "ante", "weak")

    def _rule_weakR(self, step):
        self._side_rule(step, "succ", "weak")

    def _rule_contrL(self, step):
        self._side_rule(step, "ante", "contr")

    def _rule_contrR(self, step):
        self._side_rule(step, "succ", "contr")

    def _rule_exchL(self, step):
        self._side_rule(step, "ante", "exch")

    def _rule_exchR(self, step):
        self._side_rule(step, "succ", "exch")

    # -- logical rules --------------------------------------------------------
    def _rule_andL(self, step):
        (p,) = self._premises(step, 1)
        s = step.sequent
        if not _same(_ms(p.succ), _ms(s.succ)):
            raise RuleError("andL must keep the right side")
        concl = _ms(s.ante)
        for f in concl:
            if isinstance(f, And):
                rest = _minus(concl, f)
                for extra in ((f.left,), (f.right,), (f.left, f.right)):
                    if _same(_plus(rest, *extra), _ms(p.ante)):
                        return
        raise RuleError("no conjunction on the left matches the premise")

    def _rule_andR(self, step):
        p1, p2 = self._premises(step, 2)
        s = step.sequent
        for f in _ms(s.succ):
            if isinstance(f, And):
                delta = _minus(_ms(s.succ), f)
                if (
                    _same(_ms(p1.ante), _ms(s.ante))
                    and _same(_ms(p2.ante), _ms(s.ante))
                    and _same(_ms(p1.succ), _plus(delta, f.left))
                    and _same(_ms(p2.succ), _plus(delta, f.right))
                ):
                    return
        raise RuleError("premises do not prove the two conjuncts in the same context")

    def _rule_orL(self, step):
        p1, p2 = self._premises(step, 2)
        s = step.sequent
        for f in _ms(s.ante):
            if isinstance(f, Or):
                gamma = _minus(_ms(s.ante), f)
                if (
                    _same(_ms(p1.succ), _ms(s.succ))
                    and _same(_ms(p2.succ), _ms(s.succ))
                    and _same(_ms(p1.ante), _plus(gamma, f.left))
                    and _same(_ms(p2.ante), _plus(gamma, f.right))
                ):
                    return
        raise RuleError("premises do not assume the two disjuncts in the same context")

    def _rule_orR(self, step):
        (p,) = self._premises(step, 1)
        s = step.sequent
        if not _same(_ms(p.ante), _ms(s.ante)):
            raise RuleError("orR must keep the left side")
        concl = _ms(s.succ)
        for f in concl:
            if isinstance(f, Or):
                rest = _minus(concl, f)
                for extra in ((f.left,), (f.right,), (f.left, f.right)):
                    if _same(_plus(rest, *extra), _ms(p.succ)):
                        return
        raise RuleError("no disjunction on the right matches the premise")

    def _rule_notL(self, step):
        (p,) = self._premises(step, 1)
        s = step.sequent
        for f in _ms(s.ante):
            if isinstance(f, Not):
                if _same(_ms(p.ante), _minus(_ms(s.ante), f)) and _same(_ms(p.succ), _plus(_ms(s.succ), f.arg)):
                    return
        raise RuleError("premise is not 'Gamma |- Delta, alpha' for a negation on the left")

    def _rule_notR(self, step):
        (p,) = self._premises(step, 1)
        s = step.sequent
        for f in _ms(s.succ):
            if isinstance(f, Not):
                if _same(_ms(p.succ), _minus(_ms(s.succ), f)) and _same(_ms(p.ante), _plus(_ms(s.ante), f.arg)):
                    return
        raise RuleError("premise is not 'alpha, Gamma |- Delta' for a negation on the right")

    def _rule_cut(self, step):
        p1, p2 = self._premises(step, 2)
        s = step.sequent
        ca, cs = _ms(s.ante), _ms(s.succ)
        for alpha in set(p1.succ) & set(p2.ante):
            d1 = _minus(_ms(p1.succ), alpha)
            g2 = _minus(_ms(p2.ante), alpha)
            # shared context: Gamma |- Delta, a  and  a, Gamma |- Delta
            if _same(_ms(p1.ante), ca) and _same(g2, ca) and _same(d1, cs) and _same(_ms(p2.succ), cs):
                return
            # separate contexts: Gamma |- Delta, a  and  a, Pi |- Lambda
            if _same(ca, _ms(p1.ante) + g2) and _same(cs, d1 + _ms(p2.succ)):
                return
        raise RuleError("no cut formula joins the premises into the conclusion")

    # -- nonlogical rules -----------------------------------------------------
    def _rule_ind(self, step):
        if len(step.args) != 3:
            raise RuleError("induction is written ind(premise; variable; term)")
        (p,) = self._premises(step, 1)
        var = step.args[1]
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", var) or parse_term(var).sort != INDEX:
            raise RuleError(f"{var!r} is not an index variable")
        try:
            n = parse_term(step.args[2])
        except LapSyntaxError as err:
            raise RuleError(f"cannot parse the induction bound: {err}") from None
        if n.sort != INDEX:
            raise RuleError("the induction bound must be an index term")
        iv = Var(var, INDEX)
        succ_i = App("+", (iv, Const(1, INDEX)), INDEX)
        s = step.sequent
        for a in set(p.ante):
            b = substitute(a, {var: succ_i})
            if b not in p.succ:
                continue
            gamma = _minus(_ms(p.ante), a)
            delta = _minus(_ms(p.succ), b)
            if any(var in free_vars(f) for f in list(gamma) + list(delta)):
                raise RuleError(f"the induction variable {var} occurs free in the side formulas")
            a0 = substitute(a, {var: Const(0, INDEX)})
            an = substitute(a, {var: n})
            if _same(_ms(s.ante), _plus(gamma, a0)) and _same(_ms(s.succ), _plus(delta, an)):
                return
            raise RuleError(
                f"conclusion should be {show(Sequent(tuple(gamma.elements()) + (a0,), (an,) + tuple(delta.elements())))}"
            )
        raise RuleError("premise is not of the form 'Gamma, alpha(i) |- alpha(i+1), Delta'")

    def _rule_meq(self, step):
        labels = [x.strip() for x in step.args[0].split(",")] if step.args and step.args[0] else []
        names = ("S1", "S2", "S3")
        if len(labels) < 3:
            missing = ", ".join(names[len(labels):])
            raise RuleError(f"matrix equality needs premises S1, S2, S3; missing {missing}")
        prems = self._premises(step, 3)
        s = step.sequent
        gamma = _ms(s.ante)
        fails = []
        for f in set(s.succ):
            if not (isinstance(f, Rel) and f.op == "=" and f.left.sort == "matrix"):
                continue
            T, U = f.left, f.right
            delta = _minus(_ms(s.succ), f)
            reason = self._meq_shapes(prems, gamma, delta, T, U, s)
            if reason is None:
                return
            fails.append(reason)
        if not fails:
            raise RuleError("the conclusion has no matrix equation on the right")
        raise RuleError(fails[0])

    def _meq_shapes(self, prems, gamma, delta, T, U, concl) -> str | None:
        s1, s2, s3 = prems
        r = lambda M: App("r", (M,), INDEX)  # noqa: E731
        c = lambda M: App("c", (M,), INDEX)  # noqa: E731
        for name, prem, atom in (("S2", s2, Rel("=", r(T), r(U))), ("S3", s3, Rel("=", c(T), c(U)))):
            if not (_same(_ms(prem.ante), gamma) and _same(_ms(prem.succ), _plus(delta, atom))):
                return f"premise {name} should be {show(Sequent(tuple(gamma.elements()), tuple(delta.elements()) + (atom,)))}"
        if not _same(_ms(s1.ante), gamma):
            return "premise S1 must have the same antecedent as the conclusion"
        extra = _ms(s1.succ) - delta
        if sum(extra.values()) != 1 or not _same(_ms(s1.succ), _plus(delta, next(iter(extra)))):
            return "premise S1 should add exactly one entry equation to the conclusion's right side"
        atom = next(iter(extra))
        ok = (
            isinstance(atom, Rel)
            and atom.op == "="
            and isinstance(atom.left, App)
            and atom.left.op == "e"
            and isinstance(atom.right, App)
            and atom.right.op == "e"
            and atom.left.args[0] == T
            and atom.right.args[0] == U
            and atom.left.args[1:] == atom.right.args[1:]
        )
        if not ok:
            return "premise S1 should be an entry equation e(T,i,j) = e(U,i,j)"
        i, j = atom.left.args[1:]
        if not (isinstance(i, Var) and isinstance(j, Var) and i.name != j.name):
            return "premise S1 must use two distinct index variables for the entry position"
        used = free_vars(concl)
        for v in (i, j):
            if v.name in used:
                return f"entry variable {v.name} of S1 occurs free in the conclusion"
        return None


def check_proof(text: str) -> ProofReport:
    return ProofChecker().check_text(text)


def check_proof_file(path: str | Path) -> ProofReport:
    return check_proof(Path(path).read_text(encoding="utf-8"))
