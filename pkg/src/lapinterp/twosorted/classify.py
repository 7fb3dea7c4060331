"""Syntactic classes: Sigma-B-0, Sigma-B-1, or neither.

A formula is Sigma-B-0 when it has no string quantifiers and every number
quantifier is bounded.  It is Sigma-B-1 when it is a (possibly empty) run of
bounded existential string quantifiers in front of a Sigma-B-0 body.

Formulas hidden inside terms (the conditions of ``condn``/``conds`` and the
bodies of the matrix builders) are checked too: a string quantifier buried in
a term would otherwise escape the count.  Registered symbols are treated as
primitive, so the classes are relative to the registry's vocabulary.
"""

from __future__ import annotations

from enum import Enum

from .ast import NumQ, StrQ, children


class FormulaClass(str, Enum):
    SIGMA_B0 = "SigmaB0"
    SIGMA_B1 = "SigmaB1"
    OTHER = "Other"

    def __str__(self) -> str:
        return self.value


def is_sigma_b0(node) -> bool:
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, StrQ):
            return False
        if isinstance(n, NumQ) and n.bound is None:
            return False
        stack.extend(children(n))
    return True


def classify(phi) -> FormulaClass:
    body = phi
    while isinstance(body, StrQ):
        if body.kind != "exists" or body.bound is None:
            return FormulaClass.OTHER
        if not is_sigma_b0(body.bound) or (
            body.witness is not None and not is_sigma_b0(body.witness)
        ):
            return FormulaClass.OTHER
        body = body.body
    if not is_sigma_b0(body):
        return FormulaClass.OTHER
    return FormulaClass.SIGMA_B0 if body is phi else FormulaClass.SIGMA_B1
