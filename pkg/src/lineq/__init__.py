"""Proof terms for linear equality, their diagram semantics and coherence-based equality."""

from .syntax import (
    TOP, Atom, Conj, Product, Rel, Top, Var, equiv, leq, occurrences, rename_formula,
    top_purge,
)
from .proofterm import (
    ArrowType, BBwd, BFwd, Compose, Cong, DeltaBwd, DeltaFwd, Id, Inv, Refl, SigmaBwd,
    SigmaFwd, Sym, Tensor, Theory, Trans, infer_type, random_term, rename_arrow, top_iso,
)
from .diagram import Diagram, compose, eval_diagram, eval_traced, identity_diagram, tensor
from .text import parse_arrow, parse_formula, show_arrow, show_formula

__version__ = "0.1.0"

__all__ = [
    "TOP", "Atom", "Conj", "Product", "Rel", "Top", "Var", "equiv", "leq", "occurrences",
    "rename_formula", "top_purge", "ArrowType", "BBwd", "BFwd", "Compose", "Cong", "DeltaBwd",
    "DeltaFwd", "Id", "Inv", "Refl", "SigmaBwd", "SigmaFwd", "Sym", "Tensor", "Theory", "Trans",
    "infer_type", "random_term", "rename_arrow", "top_iso", "Diagram", "compose",
    "eval_diagram", "eval_traced", "identity_diagram", "tensor", "parse_arrow",
    "parse_formula", "show_arrow", "show_formula",
]
