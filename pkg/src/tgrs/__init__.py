"""Twisted generalized Reed-Solomon codes with several twists over finite fields."""

from .classify import (
    ClassificationReport,
    classify,
    defect_is_l,
    dual_defect_is_l,
    gram_is_zero,
    is_amds,
    is_l_mds,
    is_mds,
    is_self_dual,
)
from .code import TgrsSpec, encode, generator_matrix, parity_check_matrix, validate_spec
from .construct import SearchResult, SelfDualRecipe, construct_self_dual, eta_chain, search_mds
from .errors import BudgetExceededError, FieldMismatchError, HypothesisError, TgrsError
from .field import GF, FieldElem, make_field, parse_field
from .matrix import MatGF
from .poly import Poly, e_sequence, lambda_sequence, poly_from_roots

__all__ = [
    "BudgetExceededError", "ClassificationReport", "FieldElem", "FieldMismatchError", "GF",
    "HypothesisError", "MatGF", "Poly", "SearchResult", "SelfDualRecipe", "TgrsError", "TgrsSpec",
    "classify", "construct_self_dual", "defect_is_l", "dual_defect_is_l", "e_sequence", "encode",
    "eta_chain", "generator_matrix", "gram_is_zero", "is_amds", "is_l_mds", "is_mds", "is_self_dual",
    "lambda_sequence", "make_field", "parity_check_matrix", "parse_field", "poly_from_roots",
    "search_mds", "validate_spec",
]
