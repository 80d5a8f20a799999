"""Shape predicates on arrow terms: factors, heads, developed and normal forms."""

from __future__ import annotations

from collections import Counter
from typing import Iterator

from ..proofterm import (
    ArrowTerm, ArrowType, Compose, DeltaBwd, DeltaFwd, Id, Inv, Refl, SigmaBwd, SigmaFwd,
    Tensor, Theory, infer_type, is_primitive,
)
from ..syntax import occurrences


def factors(f: ArrowTerm) -> list[ArrowTerm]:
    """The composition-free pieces of ``f``, outermost first (f_n, ..., f_1)."""
    out: list[ArrowTerm] = []
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Compose):
            stack.append(g.f)
            stack.append(g.g)
        else:
            out.append(g)
    return out


def has_compose(f: ArrowTerm) -> bool:
    if isinstance(f, Compose):
        return True
    if isinstance(f, Tensor):
        return has_compose(f.f) or has_compose(f.g)
    return False


def head(f: ArrowTerm) -> ArrowTerm | None:
    """The head of a beta-term, or ``None`` when ``f`` is not one."""
    while isinstance(f, Tensor):
        if isinstance(f.f, Id):
            f = f.g
        elif isinstance(f.g, Id):
            f = f.f
        else:
            return None
    if is_primitive(f) and not isinstance(f, Id):
        return f
    return None


def is_one_term(f: ArrowTerm) -> bool:
    while isinstance(f, Tensor):
        if isinstance(f.f, Id):
            f = f.g
        elif isinstance(f.g, Id):
            f = f.f
        else:
            return False
    return isinstance(f, Id)


def is_beta_term(f: ArrowTerm, head_: ArrowTerm | type | None = None) -> bool:
    """``f`` is a beta-term; with ``head_`` also require that head (a term or a class)."""
    h = head(f)
    if h is None:
        return False
    if head_ is None:
        return True
    if isinstance(head_, type):
        return isinstance(h, head_)
    return h == head_


def is_headed_factor(f: ArrowTerm) -> bool:
    return head(f) is not None


def is_factorized(f: ArrowTerm) -> bool:
    return not any(has_compose(g) for g in factors(f))


def is_headed(f: ArrowTerm) -> bool:
    return all(is_headed_factor(g) or is_one_term(g) for g in factors(f))


def is_developed(f: ArrowTerm) -> bool:
    fs = factors(f)
    return is_one_term(fs[-1]) and all(is_headed_factor(g) for g in fs[:-1])


def _generators(f: ArrowTerm) -> Iterator[ArrowTerm]:
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Compose):
            stack += [g.g, g.f]
        elif isinstance(g, Tensor):
            stack += [g.f, g.g]
        else:
            yield g


def is_r_less(f: ArrowTerm) -> bool:
    return not any(isinstance(g, Refl) for g in _generators(f))


def is_r_factorized(f: ArrowTerm) -> bool:
    return all(is_one_term(g) or is_beta_term(g, Refl) for g in factors(f))


def count_refl(f: ArrowTerm) -> int:
    return sum(isinstance(g, Refl) for g in _generators(f))


def is_delta_sigma_less(f: ArrowTerm) -> bool:
    return not any(isinstance(g, (DeltaFwd, DeltaBwd, SigmaFwd, SigmaBwd)) for g in _generators(f))


def is_s_normal(f: ArrowTerm) -> bool:
    pairs = Counter(frozenset((g.t1, g.t2)) for g in _generators(f) if isinstance(g, Inv))
    return all(n <= 1 for n in pairs.values())


def is_diversified_type(f: ArrowTerm | ArrowType, theory: Theory | None = None) -> bool:
    ty = f if isinstance(f, ArrowType) else infer_type(f, theory)
    counts = Counter(occurrences(ty.source) + occurrences(ty.target))
    return all(n == 2 for n in counts.values())
