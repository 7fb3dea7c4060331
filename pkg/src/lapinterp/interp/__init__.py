"""Interpretations of LAp into the two-sorted theories over Z2 and over Z."""

from .bridge import (
    encode_env,
    encode_for,
    field_carrier2,
    unwrap_matrix2,
    unwrap_matrixz,
    wrap_matrix2,
    wrap_matrixz,
)
from .difftest import (
    Comparator,
    CorpusReport,
    DiffConfig,
    DiffReport,
    axiom_corpus,
    differential_test,
)
from .translator import (
    TARGETS,
    TranslationContext,
    TranslationError,
    translate,
    translate_field,
    translate_formula,
    translate_index,
    translate_matrix,
)
from .vocab import INTERP, INTERP_SYMBOLS, interp_registry, is_matrix2, is_matrixz

__all__ = [
    "INTERP",
    "INTERP_SYMBOLS",
    "TARGETS",
    "Comparator",
    "CorpusReport",
    "DiffConfig",
    "DiffReport",
    "TranslationContext",
    "TranslationError",
    "axiom_corpus",
    "differential_test",
    "encode_env",
    "encode_for",
    "field_carrier2",
    "interp_registry",
    "is_matrix2",
    "is_matrixz",
    "translate",
    "translate_field",
    "translate_formula",
    "translate_index",
    "translate_matrix",
    "unwrap_matrix2",
    "unwrap_matrixz",
    "wrap_matrix2",
    "wrap_matrixz",
]
