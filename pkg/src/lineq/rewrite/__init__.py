"""Equation schemas, one-step rewriting, derivations and the normalization passes."""

from .derivation import BudgetExceeded, Derivation, DerivationStep, Rewriter, default_budget
from .equations import (
    Direction, EquationSchema, NoMatchAtPath, RewriteError, SchemaNotInTheory, apply_equation,
    equation_table, get_schema,
)
from .normal import (
    NormalizationStuck, PreconditionCongConsumesR, PreconditionError, PreconditionNotDiversified,
    PreconditionNotRLess, PreconditionTopInType, delta_sigma_purge, develop, r_normal, s_normal,
)
from .search import connect, enumerate_from, instantiate_schema, random_walk, rewrites
from .shapes import (
    count_refl, factors, head, is_beta_term, is_delta_sigma_less, is_developed,
    is_diversified_type, is_factorized, is_headed, is_one_term, is_r_factorized, is_r_less,
    is_s_normal,
)

__all__ = [
    "BudgetExceeded", "Derivation", "DerivationStep", "Direction", "EquationSchema",
    "NoMatchAtPath", "NormalizationStuck", "PreconditionCongConsumesR", "PreconditionError",
    "PreconditionNotDiversified", "PreconditionNotRLess", "PreconditionTopInType",
    "RewriteError", "Rewriter", "SchemaNotInTheory", "apply_equation", "connect",
    "count_refl", "default_budget", "delta_sigma_purge", "develop", "enumerate_from",
    "equation_table", "factors", "get_schema", "head", "instantiate_schema",
    "is_beta_term", "is_delta_sigma_less", "is_developed", "is_diversified_type",
    "is_factorized", "is_headed", "is_one_term", "is_r_factorized", "is_r_less",
    "is_s_normal", "r_normal", "random_walk", "rewrites", "s_normal",
]
