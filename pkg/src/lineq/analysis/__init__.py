"""Coherence-based decisions, generality, maximal sequences and the reflexivity adjunction."""

from __future__ import annotations

from ..proofterm import ArrowTerm, Theory, infer_type
from ..rewrite.equations import middle_four_term
from ..syntax import Formula
from .adjunction import (
    AdjunctionContext, AdjunctionReport, NotInSubcategory, VariableYOccurs, adjunction_counit,
    adjunction_F, adjunction_G, adjunction_unit, check_adjunction, derived_refl, derived_sym,
    derived_trans,
)
from .decide import TypeMismatch, decide_equal, diversify, generality_class, same_generality
from .sequences import check_star, conjunction_spans, covered_conjunctions, maximal_sequences


def middle_four(a: Formula, b: Formula, c: Formula, d: Formula,
                theory: Theory = Theory.S_LEQ) -> ArrowTerm:
    """``(A/\\B)/\\(C/\\D) |- (A/\\C)/\\(B/\\D)``; needs a theory with ``c``."""
    f = middle_four_term(a, b, c, d)
    infer_type(f, theory)
    return f


__all__ = [
    "AdjunctionContext", "AdjunctionReport", "NotInSubcategory", "TypeMismatch",
    "VariableYOccurs", "adjunction_F", "adjunction_G", "adjunction_counit", "adjunction_unit",
    "check_adjunction", "check_star", "conjunction_spans", "covered_conjunctions",
    "decide_equal", "derived_refl", "derived_sym", "derived_trans", "diversify",
    "generality_class", "maximal_sequences", "middle_four", "same_generality",
]
