"""The three-sorted theory LAp: syntax, standard-model semantics, axioms and proofs."""

from .ast import FIELD, INDEX, MATRIX, App, Cond, Const, Lam, Sequent, Var, substitute
from .axioms import AXIOMS, Axiom, AxiomError, axiom_ids, get_axiom, instantiate
from .derived import expand, expand_all
from .evaluator import LapEvalError, LapEvaluator, MatVal, eval_derived, eval_term
from .parser import (
    LapSortError,
    LapSyntaxError,
    parse,
    parse_formula,
    parse_sequent,
    parse_term,
    show,
)
from .proof import ProofReport, check_proof, check_proof_file
from .randgen import GenConfig, TermGen, random_env
from .semantic import SemanticReport, check_all_axioms, check_axiom, semantic_check_sequent

__all__ = [
    "AXIOMS",
    "App",
    "Axiom",
    "AxiomError",
    "Cond",
    "Const",
    "FIELD",
    "GenConfig",
    "INDEX",
    "Lam",
    "LapEvalError",
    "LapEvaluator",
    "LapSortError",
    "LapSyntaxError",
    "MATRIX",
    "MatVal",
    "ProofReport",
    "SemanticReport",
    "Sequent",
    "TermGen",
    "Var",
    "axiom_ids",
    "check_all_axioms",
    "check_axiom",
    "check_proof",
    "check_proof_file",
    "eval_derived",
    "eval_term",
    "expand",
    "expand_all",
    "get_axiom",
    "instantiate",
    "parse",
    "parse_formula",
    "parse_sequent",
    "parse_term",
    "random_env",
    "semantic_check_sequent",
    "show",
    "substitute",
]
