"""The nonlogical axioms A1-A36 of LAp as sequent templates.

Axioms stated for "any sort" or "any function symbol" (A1-A4) are listed once
per instance, with ids such as ``A1.matrix`` or ``A4.e``.  Axioms that join
several sequents with "and" are split into ``A15.1``, ``A15.2`` and so on.
``A21z`` is the integral-domain form used over Z in place of ``A21``.

The free variables of a template are its metavariables: a substitution may
replace any of them by a term of the same sort (or, for ``alpha``, by an
index-only formula).  The exceptions are in :attr:`Axiom.fixed`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..ring import Ring, ring_named
from .ast import (
    FormulaVar,
    Not,
    Rel,
    Sequent,
    And,
    Or,
    contains_inverse,
    free_var_sorts,
    free_vars,
    formula_vars,
    is_index_only,
    substitute,
)
from .parser import parse_sequent


@dataclass(frozen=True)
class Axiom:
    id: str
    text: str
    # metavariables whose replacement may mention the lambda binders
    capturing: frozenset = frozenset()
    # variables that are part of the schema and must not be substituted
    fixed: frozenset = frozenset()
    # names a substituted term must avoid (binder names of the template)
    avoid: frozenset = frozenset()
    rings: tuple = ("z2", "z")
    note: str = field(default="", compare=False)

    @cached_property
    def sequent(self) -> Sequent:
        return parse_sequent(self.text)

    @cached_property
    def metavariables(self) -> dict:
        """name -> sort for term metavariables; formula variables map to 'formula'."""
        sorts = {k: v for k, v in free_var_sorts(self.sequent).items() if k not in self.fixed}
        for name in formula_vars(self.sequent):
            sorts[name] = "formula"
        return dict(sorted(sorts.items()))

    @property
    def family(self) -> str:
        """The undotted axiom number, e.g. ``A15`` for ``A15.2``."""
        base = self.id.split(".")[0]
        return "A21" if base == "A21z" else base


_BINDERS = frozenset({"i", "j"})


def _a4(op_id: str, text: str, rings=("z2", "z")) -> Axiom:
    return Axiom(f"A4.{op_id}", text, rings=rings)


_TABLE: list[Axiom] = [
    # equality
    Axiom("A1.index", "|- i = i"),
    Axiom("A1.field", "|- a = a"),
    Axiom("A1.matrix", "|- A = A"),
    Axiom("A2.index", "i = j |- j = i"),
    Axiom("A2.field", "a = b |- b = a"),
    Axiom("A2.matrix", "A = B |- B = A"),
    Axiom("A3.index", "i = j & j = k |- i = k"),
    Axiom("A3.field", "a = b & b = c |- a = c"),
    Axiom("A3.matrix", "A = B & B = C |- A = C"),
    _a4("index_add", "i1 = j1, i2 = j2 |- i1 + i2 = j1 + j2"),
    _a4("index_mul", "i1 = j1, i2 = j2 |- i1 * i2 = j1 * j2"),
    _a4("index_sub", "i1 = j1, i2 = j2 |- i1 - i2 = j1 - j2"),
    _a4("div", "i1 = j1, i2 = j2 |- div(i1, i2) = div(j1, j2)"),
    _a4("rem", "i1 = j1, i2 = j2 |- rem(i1, i2) = rem(j1, j2)"),
    _a4("r", "A1 = B1 |- r(A1) = r(B1)"),
    _a4("c", "A1 = B1 |- c(A1) = c(B1)"),
    _a4("index_cond", "i1 = j1, i2 = j2 |- cond(alpha, i1, i2) = cond(alpha, j1, j2)"),
    _a4("field_add", "a1 = b1, a2 = b2 |- a1 + a2 = b1 + b2"),
    _a4("field_mul", "a1 = b1, a2 = b2 |- a1 * a2 = b1 * b2"),
    _a4("field_sub", "a1 = b1, a2 = b2 |- a1 - a2 = b1 - b2"),
    _a4("neg", "a1 = b1 |- -a1 = -b1"),
    _a4("inv", "a1 = b1 |- inv(a1) = inv(b1)", rings=("z2",)),
    _a4("e", "A1 = B1, i1 = j1, i2 = j2 |- e(A1, i1, i2) = e(B1, j1, j2)"),
    _a4("Sigma", "A1 = B1 |- Sigma(A1) = Sigma(B1)"),
    _a4("field_cond", "a1 = b1, a2 = b2 |- cond(alpha, a1, a2) = cond(alpha, b1, b2)"),
    _a4("p", "i1 = j1, A1 = B1 |- p(i1, A1) = p(j1, B1)"),
    Axiom("A5", "i1 = j1, i2 = j2, i1 <= i2 |- j1 <= j2"),
    # indices
    Axiom("A6", "|- i + 1 != 0"),
    Axiom("A7", "|- i * (j + 1) = (i * j) + i"),
    Axiom("A8", "i + 1 = j + 1 |- i = j"),
    Axiom("A9", "|- i <= i + j"),
    Axiom("A10", "|- i + 0 = i"),
    Axiom("A11", "|- i <= j, j <= i"),
    Axiom("A12", "|- i + (j + 1) = (i + j) + 1"),
    Axiom("A13", "i <= j, j <= i |- i = j"),
    Axiom("A14", "|- i * 0 = 0"),
    Axiom("A15.1", "i <= j, i + k = j |- j - i = k"),
    Axiom("A15.2", "!(i <= j) |- j - i = 0"),
    Axiom("A16.1", "j != 0 |- rem(i, j) < j"),
    Axiom("A16.2", "j != 0 |- i = j * div(i, j) + rem(i, j)"),
    Axiom("A17.1", "alpha |- cond(alpha, i, j) = i"),
    Axiom("A17.2", "!alpha |- cond(alpha, i, j) = j"),
    # field elements
    Axiom("A18", "|- (0 : field) != 1 & a + 0 = a"),
    Axiom("A19", "|- a + -a = 0"),
    Axiom("A20", "|- 1 * a = a"),
    Axiom("A21", "a != 0 |- a * inv(a) = 1", rings=("z2",)),
    Axiom("A21z", "a * b = 0, a != 0 |- b = 0", rings=("z",),
          note="integral-domain replacement for A21 over Z"),
    Axiom("A22", "|- a + b = b + a"),
    Axiom("A23", "|- a * b = b * a"),
    Axiom("A24", "|- a + (b + c) = (a + b) + c"),
    Axiom("A25", "|- a * (b * c) = (a * b) * c"),
    Axiom("A26", "|- a * (b + c) = a * b + a * c"),
    Axiom("A27.1", "alpha |- cond(alpha, a, b) = a"),
    Axiom("A27.2", "!alpha |- cond(alpha, a, b) = b"),
    # matrices
    Axiom("A28", "i = 0 | r(A) < i | j = 0 | c(A) < j |- e(A, i, j) = 0"),
    Axiom("A29.1", "|- r(lambda i j <m, n, f>) = m", capturing=frozenset({"f"}),
          fixed=_BINDERS, avoid=_BINDERS),
    Axiom("A29.2", "|- c(lambda i j <m, n, f>) = n", capturing=frozenset({"f"}),
          fixed=_BINDERS, avoid=_BINDERS),
    Axiom("A29.3", "1 <= i, i <= m, 1 <= j, j <= n |- e(lambda i j <m, n, f>, i, j) = f",
          capturing=frozenset({"f"}), fixed=_BINDERS, avoid=_BINDERS),
    Axiom("A30", "r(A) = 1, c(A) = 1 |- Sigma(A) = e(A, 1, 1)"),
    Axiom("A31", "r(A) = 1, 1 < c(A) |- Sigma(A) = Sigma(lambda i j <1, c(A) - 1, e(A, i, j)>) + e(A, 1, c(A))"),
    Axiom("A32", "c(A) = 1 |- Sigma(A) = Sigma(transpose(A))"),
    Axiom("A33", "1 < r(A), 1 < c(A) |- Sigma(A) = e(A, 1, 1) + Sigma(R(A)) + Sigma(S(A)) + Sigma(M(A))"),
    Axiom("A34", "r(A) = 0 | c(A) = 0 |- Sigma(A) = 0"),
    # powering
    Axiom("A35", "|- p(0, A) = identity(r(A))"),
    Axiom("A36", "|- p(n + 1, A) = p(n, A) * A"),
]

AXIOMS: dict[str, Axiom] = {ax.id: ax for ax in _TABLE}


class AxiomError(ValueError):
    pass


def axiom_ids(ring: Ring | str | None = None) -> list[str]:
    """Ids of the axiom instances, restricted to those used over ``ring``."""
    if ring is None:
        return list(AXIOMS)
    name = (ring_named(ring) if isinstance(ring, str) else ring).name
    return [k for k, ax in AXIOMS.items() if name in ax.rings]


def get_axiom(axiom_id: str, ring: Ring | str | None = None) -> Axiom:
    """Look up an axiom; ``A21`` over Z resolves to its integral-domain form."""
    key = axiom_id
    if ring is not None:
        name = (ring_named(ring) if isinstance(ring, str) else ring).name
        if key == "A21" and name == "z":
            key = "A21z"
    try:
        return AXIOMS[key]
    except KeyError:
        raise AxiomError(f"unknown axiom {axiom_id!r}") from None


def instantiate(axiom_id: str, subst: dict | None = None, ring: Ring | str | None = None) -> Sequent:
    """The axiom's sequent with ``subst`` applied.

    ``subst`` maps metavariable names to LAp terms (of the metavariable's
    sort) or, for formula variables, to index-only formulas.
    """
    ax = get_axiom(axiom_id, ring)
    subst = dict(subst or {})
    metas = ax.metavariables
    for name, value in subst.items():
        if name not in metas:
            raise AxiomError(f"{ax.id} has no metavariable {name!r}")
        want = metas[name]
        if want == "formula":
            if not isinstance(value, (Rel, Not, And, Or, FormulaVar)):
                raise AxiomError(f"{name} must be replaced by a formula")
            if not is_index_only(value):
                raise AxiomError(f"{name} appears under cond, so its replacement may only compare indices")
        else:
            got = getattr(value, "sort", None)
            if got != want:
                raise AxiomError(f"{name} is a {want} metavariable, got a {got or 'non-term'}")
        if ax.avoid and name not in ax.capturing and want != "formula" and free_vars(value) & ax.avoid:
            raise AxiomError(f"replacement for {name} mentions a lambda binder of {ax.id}")
        if ring is not None and (ring_named(ring) if isinstance(ring, str) else ring).name == "z":
            if contains_inverse(value):
                raise AxiomError(f"substitution for {name} uses the field inverse, which is undefined over Z")
    return substitute(ax.sequent, subst, capturing=ax.capturing)
