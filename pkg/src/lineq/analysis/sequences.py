"""Source-side structure of r-less arrow terms: maximal sequences and covered conjunctions."""

from __future__ import annotations

from ..diagram import SRC, TGT, Endpoint, eval_diagram
from ..proofterm import ArrowTerm, Theory, infer_type
from ..rewrite.normal import PreconditionError, PreconditionNotRLess
from ..rewrite.shapes import is_r_less
from ..syntax import Atom, Conj, Formula, term_vars

Position = tuple[str, ...]


def _atom_spans(a: Formula, side: int) -> list[tuple[list[Endpoint], list[Endpoint]]]:
    """For every atom, the endpoints of its left-hand and right-hand occurrences."""
    out, pos = [], 0
    stack = [a]
    while stack:
        b = stack.pop()
        if isinstance(b, Conj):
            stack += [b.right, b.left]
        elif isinstance(b, Atom):
            n, m = len(term_vars(b.lhs)), len(term_vars(b.rhs))
            out.append(([(side, pos + i) for i in range(n)],
                        [(side, pos + n + i) for i in range(m)]))
            pos += n + m
    return out


def _require_r_less(f: ArrowTerm) -> None:
    if not is_r_less(f):
        raise PreconditionNotRLess("the term contains r")


def maximal_sequences(f: ArrowTerm, theory: Theory) -> list[list[Endpoint]]:
    """Source occurrences chained by atom pairs and cups, one list per chain.

    Each list reads u1 <= u2, cup, u3 <= u4, ... ; lists are ordered by their
    smallest member.
    """
    ty = infer_type(f, theory)
    _require_r_less(f)
    d = eval_diagram(f, theory)
    atom_link: dict[Endpoint, Endpoint] = {}
    is_left: set[Endpoint] = set()
    for lhs, rhs in _atom_spans(ty.source, SRC):
        if len(lhs) != len(rhs):
            raise PreconditionError("maximal sequences need atoms with sides of equal length")
        for a, b in zip(lhs, rhs):
            atom_link[a], atom_link[b] = b, a
            is_left.add(a)
    cup = {}
    for a, b in d.cups():
        cup[a], cup[b] = b, a

    def walk(start: Endpoint) -> list[Endpoint]:
        seq, e = [start], atom_link[start]
        while e != start:
            seq.append(e)
            nxt = cup.get(e)
            if nxt is None or nxt == start:
                break
            seq.append(nxt)
            e = atom_link[nxt]
        return seq

    done: set[Endpoint] = set()
    out = []
    for i in range(len(d.src)):
        e = (SRC, i)
        if e in done:
            continue
        comp = _component(e, atom_link, cup)
        cands = [x for x in comp if x not in cup] or list(comp)
        start = min([x for x in cands if x in is_left] or cands)
        seq = walk(start)
        done.update(seq)
        out.append(seq)
    return sorted(out, key=min)


def _component(e: Endpoint, atom_link: dict, cup: dict) -> set[Endpoint]:
    comp, todo = set(), [e]
    while todo:
        x = todo.pop()
        if x in comp:
            continue
        comp.add(x)
        todo.append(atom_link[x])
        if x in cup:
            todo.append(cup[x])
    return comp


def check_star(f: ArrowTerm, theory: Theory) -> bool:
    """Every maximal sequence reaches either both sides of a target atom or neither."""
    ty = infer_type(f, theory)
    seqs = maximal_sequences(f, theory)
    partner = eval_diagram(f, theory).partner()
    target_atoms = _atom_spans(ty.target, TGT)
    for seq in seqs:
        reached = {partner[e] for e in seq if partner[e][0] == TGT}
        for lhs, rhs in target_atoms:
            if bool(reached.intersection(lhs)) != bool(reached.intersection(rhs)):
                return False
    return True


def conjunction_spans(a: Formula) -> dict[Position, tuple[int, int, int]]:
    """Each conjunction's position mapped to (start, split, end) occurrence indices."""
    out: dict[Position, tuple[int, int, int]] = {}

    def go(b: Formula, pos: Position, start: int) -> int:
        if isinstance(b, Conj):
            mid = go(b.left, pos + ("L",), start)
            end = go(b.right, pos + ("R",), mid)
            out[pos] = (start, mid, end)
            return end
        if isinstance(b, Atom):
            return start + len(term_vars(b.lhs)) + len(term_vars(b.rhs))
        return start

    go(a, (), 0)
    return out


def covered_conjunctions(f: ArrowTerm, theory: Theory) -> set[Position]:
    """Positions (as L/R paths) of source conjunctions straddled by some cup."""
    ty = infer_type(f, theory)
    cups = eval_diagram(f, theory).cups()
    covered = set()
    for pos, (lo, mid, hi) in conjunction_spans(ty.source).items():
        for (_, i), (_, j) in cups:
            if lo <= i < mid <= j < hi:
                covered.add(pos)
                break
    return covered
