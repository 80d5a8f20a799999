"""Equality of arrow terms by diagrams, and diversification of variables."""

from __future__ import annotations

from itertools import count
from typing import Iterator

from ..diagram import SRC, TGT, eval_diagram, eval_traced
from ..proofterm import (
    STRUCTURAL, ArrowTerm, Compose, Cong, Inv, Path, Refl, Step, Tensor, Theory, Trans,
    arrow_fields, infer_type,
)
from ..syntax import Atom, Conj, Formula, Product, Term, Var, occurrences, term_vars


class TypeMismatch(ValueError):
    """Two arrow terms compared for generality do not share a type."""


def decide_equal(f: ArrowTerm, g: ArrowTerm, theory: Theory) -> bool:
    """Provable equality in ``theory``, decided by comparing types and diagrams."""
    if infer_type(f, theory) != infer_type(g, theory):
        return False
    return eval_diagram(f, theory) == eval_diagram(g, theory)


def same_generality(f: ArrowTerm, g: ArrowTerm, theory: Theory) -> bool:
    tf, tg = infer_type(f, theory), infer_type(g, theory)
    if tf != tg:
        raise TypeMismatch(f"{tf} vs {tg}")
    return eval_diagram(f, theory).edges == eval_diagram(g, theory).edges


# -- diversification ---------------------------------------------------------

def _fill_term(t: Term, it: Iterator[Var]) -> Term:
    if isinstance(t, Product):
        left = _fill_term(t.left, it)
        return Product(left, _fill_term(t.right, it))
    return next(it)


def _fill_formula(a: Formula, it: Iterator[Var]) -> Formula:
    if isinstance(a, Atom):
        lhs = _fill_term(a.lhs, it)
        return Atom(a.rel, lhs, _fill_term(a.rhs, it))
    if isinstance(a, Conj):
        left = _fill_formula(a.left, it)
        return Conj(left, _fill_formula(a.right, it))
    return a


def _relabel(prim: ArrowTerm, src: list[Var], tgt: list[Var]) -> ArrowTerm:
    """Rebuild ``prim`` so its source occurrences read ``src`` (``tgt`` for r)."""
    if isinstance(prim, STRUCTURAL):
        it = iter(src)
        return type(prim)(*(_fill_formula(a, it) for a in arrow_fields(prim)))
    if isinstance(prim, Refl):
        return Refl(_fill_term(prim.t, iter(tgt)))
    if isinstance(prim, Trans):
        it = iter(src)
        t1 = _fill_term(prim.t1, it)
        t2 = _fill_term(prim.t2, it)
        for _ in term_vars(prim.t2):
            next(it)
        return Trans(t1, t2, _fill_term(prim.t3, it))
    if isinstance(prim, (Inv, Cong)):
        it = iter(src)
        return type(prim)(*(_fill_term(t, it) for t in arrow_fields(prim)))
    raise TypeError(f"not a primitive: {prim!r}")


def _rebuild(f: ArrowTerm, path: Path, new: dict[Path, ArrowTerm]) -> ArrowTerm:
    if isinstance(f, Compose):
        return Compose(_rebuild(f.g, path + (Step.CL,), new), _rebuild(f.f, path + (Step.CR,), new))
    if isinstance(f, Tensor):
        return Tensor(_rebuild(f.f, path + (Step.TL,), new), _rebuild(f.g, path + (Step.TR,), new))
    return new[path]


def diversify(f: ArrowTerm, theory: Theory) -> tuple[ArrowTerm, dict[Var, Var]]:
    """One fresh variable per strand of the diagram of ``f``.

    Strands are named ``v1, v2, ...`` in order of their first endpoint, source
    row before target row; closed loops get the names after that.  Returns the
    diversified term and the renaming back to ``f``.
    """
    d, prov = eval_traced(f, theory)
    fresh = (Var(f"v{i}") for i in count(1))
    name: dict[tuple[Path, int], Var] = {}
    rho: dict[Var, Var] = {}
    partner = d.partner()
    ends = [(SRC, i) for i in range(len(d.src))] + [(TGT, j) for j in range(len(d.tgt))]
    seen = set()
    for e in ends:
        edge = tuple(sorted((e, partner[e])))
        if edge in seen:
            continue
        seen.add(edge)
        v = next(fresh)
        rho[v] = d.label(e)
        for piece in prov.edges[edge]:
            name[piece] = v
    for pieces in prov.loops:
        v = next(fresh)
        path, k = pieces[0]
        local = prov.local[path]
        rho[v] = local.label(local.edges[k][0])
        for piece in pieces:
            name[piece] = v
    new = {}
    for path, prim in prov.primitives.items():
        local = prov.local[path]
        lab = {}
        for k, (a, b) in enumerate(local.edges):
            lab[a] = lab[b] = name[(path, k)]
        src = [lab[(SRC, i)] for i in range(len(local.src))]
        tgt = [lab[(TGT, j)] for j in range(len(local.tgt))]
        new[path] = _relabel(prim, src, tgt)
    return _rebuild(f, (), new), rho


def generality_class(f: ArrowTerm, theory: Theory) -> tuple:
    """Type of the diversified term up to a bijective renaming (a canonical key)."""
    g, _ = diversify(f, theory)
    ty = infer_type(g, theory)
    order: dict[Var, int] = {}
    for v in occurrences(ty.source) + occurrences(ty.target):
        order.setdefault(v, len(order))
    return (_skeleton(ty.source), _skeleton(ty.target),
            tuple(order[v] for v in occurrences(ty.source)),
            tuple(order[v] for v in occurrences(ty.target)))


def _skeleton(a: Formula) -> str:
    if isinstance(a, Conj):
        return f"({_skeleton(a.left)},{_skeleton(a.right)})"
    if isinstance(a, Atom):
        return f"{_tskel(a.lhs)}{a.rel.value}{_tskel(a.rhs)}"
    return "T"


def _tskel(t: Term) -> str:
    return f"({_tskel(t.left)}.{_tskel(t.right)})" if isinstance(t, Product) else "_"
