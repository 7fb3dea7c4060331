"""Two-sorted formulas over L2_A: syntax, vocabulary, classes and evaluation."""

from .ast import free_vars, is_string_var
from .basic import BASIC_AXIOMS, check_basic_axioms
from .classify import FormulaClass, classify, is_sigma_b0
from .evaluator import BudgetExceeded, Evaluator, Unsupported, evaluate
from .registry import Registry, Symbol, spot_check, spot_check_all
from .sexpr import SexprError, parse_formula, parse_formulas, show
from .vocab import BASE, base_registry

__all__ = [
    "BASE",
    "BASIC_AXIOMS",
    "BudgetExceeded",
    "Evaluator",
    "FormulaClass",
    "Registry",
    "SexprError",
    "Symbol",
    "Unsupported",
    "base_registry",
    "check_basic_axioms",
    "classify",
    "evaluate",
    "free_vars",
    "is_sigma_b0",
    "is_string_var",
    "parse_formula",
    "parse_formulas",
    "show",
    "spot_check",
    "spot_check_all",
]
