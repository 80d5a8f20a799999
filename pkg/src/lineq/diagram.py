"""Brauer-style diagrams: labeled occurrence lists with a perfect matching.

An endpoint is ``(side, index)`` with side ``0`` for the source row and ``1``
for the target row.  Edges are stored as sorted pairs of endpoints and the
edge tuple itself is sorted, so structural equality is matching equality.
Closed loops produced by composition are discarded and counted; the count is
excluded from equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .proofterm import (
    ArrowTerm, BBwd, BFwd, Compose, Cong, DeltaBwd, DeltaFwd, Id, Inv, Path, Refl,
    SigmaBwd, SigmaFwd, Step, Sym, Tensor, Theory, Trans, infer_type, primitive_type,
)
from .syntax import Formula, Var, occurrences, term_vars

SRC, TGT = 0, 1
Endpoint = tuple[int, int]
Edge = tuple[Endpoint, Endpoint]


class InterfaceMismatch(ValueError):
    def __init__(self, position: int, label_f, label_g):
        self.position, self.label_f, self.label_g = position, label_f, label_g
        super().__init__(
            f"interface mismatch at position {position}: {label_f} vs {label_g}")


def _edge(a: Endpoint, b: Endpoint) -> Edge:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Diagram:
    src: tuple[Var, ...]
    tgt: tuple[Var, ...]
    edges: tuple[Edge, ...]
    loops: int = field(default=0, compare=False)

    @classmethod
    def build(cls, src: Sequence[Var], tgt: Sequence[Var], edges: Iterable[tuple],
              loops: int = 0) -> "Diagram":
        es = tuple(sorted(_edge(tuple(a), tuple(b)) for a, b in edges))
        return cls(tuple(src), tuple(tgt), es, loops)

    def partner(self) -> dict[Endpoint, Endpoint]:
        out = {}
        for a, b in self.edges:
            out[a], out[b] = b, a
        return out

    def label(self, e: Endpoint) -> Var:
        return (self.src if e[0] == SRC else self.tgt)[e[1]]

    def caps(self) -> list[Edge]:
        return [e for e in self.edges if e[0][0] == TGT and e[1][0] == TGT]

    def cups(self) -> list[Edge]:
        return [e for e in self.edges if e[0][0] == SRC and e[1][0] == SRC]

    def lines(self) -> list[Edge]:
        return [e for e in self.edges if e[0][0] != e[1][0]]

    def is_perfect_matching(self) -> bool:
        seen = [e for pair in self.edges for e in pair]
        want = [(SRC, i) for i in range(len(self.src))] + [(TGT, j) for j in range(len(self.tgt))]
        return sorted(seen) == sorted(want)

    def label_consistent(self) -> bool:
        return all(self.label(a) == self.label(b) for a, b in self.edges)

    def mirror(self) -> "Diagram":
        """Horizontal mirror image: source and target rows exchanged."""
        flip = lambda e: (1 - e[0], e[1])
        return Diagram.build(self.tgt, self.src, ((flip(a), flip(b)) for a, b in self.edges))

    def to_json(self) -> dict:
        side = "st"
        return {
            "source": [v.name for v in self.src],
            "target": [v.name for v in self.tgt],
            "edges": [[[side[a[0]], a[1]], [side[b[0]], b[1]]] for a, b in self.edges],
            "loops_discarded": self.loops,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Diagram":
        side = {"s": SRC, "t": TGT}
        edges = [((side[a[0]], a[1]), (side[b[0]], b[1])) for a, b in data["edges"]]
        return cls.build([Var(x) for x in data["source"]], [Var(x) for x in data["target"]],
                         edges, data.get("loops_discarded", 0))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def identity_diagram(a: Formula) -> Diagram:
    occ = occurrences(a)
    return Diagram.build(occ, occ, (((SRC, i), (TGT, i)) for i in range(len(occ))))


def tensor(d1: Diagram, d2: Diagram) -> Diagram:
    ns, nt = len(d1.src), len(d1.tgt)
    shift = lambda e: (e[0], e[1] + (ns if e[0] == SRC else nt))
    edges = list(d1.edges) + [(shift(a), shift(b)) for a, b in d2.edges]
    return Diagram.build(d1.src + d2.src, d1.tgt + d2.tgt, edges, d1.loops + d2.loops)


def _compose_partners(upper: dict, lower: dict, n_mid: int):
    """Path-follow through the middle row.

    ``lower`` is the partner map of the first diagram (its TGT row is the
    middle), ``upper`` that of the second (its SRC row is the middle).  Result
    endpoints are tagged ``("f", e)`` or ``("g", e)``.  Returns the list of
    joined outer pairs, the traversed middle indices per pair, and the middle
    cycles that never reach the outside.
    """
    pairs, visited = [], set()
    outer = [("f", e) for e in lower if e[0] == SRC] + [("g", e) for e in upper if e[0] == TGT]
    done = set()
    for start in outer:
        if start in done:
            continue
        where, e = start
        mids = []
        while True:
            if where == "f":
                p = lower[e]
                if p[0] == SRC:
                    end = ("f", p)
                    break
                mids.append(p[1])
                visited.add(p[1])
                where, e = "g", (SRC, p[1])
            else:
                p = upper[e]
                if p[0] == TGT:
                    end = ("g", p)
                    break
                mids.append(p[1])
                visited.add(p[1])
                where, e = "f", (TGT, p[1])
        done.add(start)
        done.add(end)
        pairs.append((start, end, mids))
    cycles = []
    for m in range(n_mid):
        if m in visited:
            continue
        cyc, e = [], (TGT, m)
        # alternate: lower edge from TGT m, then upper edge from SRC
        while True:
            visited.add(e[1])
            cyc.append(e[1])
            p = lower[e]
            visited.add(p[1])
            cyc.append(p[1])
            q = upper[(SRC, p[1])]
            e = (TGT, q[1])
            if e[1] == m:
                break
        cycles.append(cyc)
    return pairs, cycles


def _outer(tag_e) -> Endpoint:
    tag, e = tag_e
    return (SRC, e[1]) if tag == "f" else (TGT, e[1])


def compose(g: Diagram, f: Diagram) -> Diagram:
    """Vertical composition ``g o f``: first ``f``, then ``g``."""
    if len(f.tgt) != len(g.src):
        raise InterfaceMismatch(min(len(f.tgt), len(g.src)),
                                f.tgt[len(g.src):len(g.src) + 1] or None,
                                g.src[len(f.tgt):len(f.tgt) + 1] or None)
    for i, (a, b) in enumerate(zip(f.tgt, g.src)):
        if a != b:
            raise InterfaceMismatch(i, a, b)
    pairs, cycles = _compose_partners(g.partner(), f.partner(), len(f.tgt))
    edges = [(_outer(a), _outer(b)) for a, b, _ in pairs]
    return Diagram.build(f.src, g.tgt, edges, f.loops + g.loops + len(cycles))


# -- generator diagrams ------------------------------------------------------

def _blocks(sizes_src: Sequence[int], order: Sequence[int]) -> list[Edge]:
    """Block permutation: source block ``order[k]`` lands at target block ``k``."""
    starts, acc = [], 0
    for n in sizes_src:
        starts.append(acc)
        acc += n
    edges, pos = [], 0
    for b in order:
        for i in range(sizes_src[b]):
            edges.append(((SRC, starts[b] + i), (TGT, pos)))
            pos += 1
    return edges


def primitive_diagram(f: ArrowTerm, theory: Theory) -> Diagram:
    ty = primitive_type(f, theory)
    src, tgt = occurrences(ty.source), occurrences(ty.target)
    if isinstance(f, (Id, BFwd, BBwd, DeltaFwd, DeltaBwd, SigmaFwd, SigmaBwd)):
        edges = [((SRC, i), (TGT, i)) for i in range(len(src))]
    elif isinstance(f, Sym):
        edges = _blocks([len(occurrences(f.a)), len(occurrences(f.b))], [1, 0])
    elif isinstance(f, Refl):
        k = len(term_vars(f.t))
        edges = [((TGT, i), (TGT, k + i)) for i in range(k)]
    elif isinstance(f, Trans):
        a, b, c = (len(term_vars(t)) for t in (f.t1, f.t2, f.t3))
        edges = [((SRC, i), (TGT, i)) for i in range(a)]
        edges += [((SRC, a + i), (SRC, a + b + i)) for i in range(b)]
        edges += [((SRC, a + 2 * b + i), (TGT, a + i)) for i in range(c)]
    elif isinstance(f, Inv):
        edges = _blocks([len(term_vars(f.t1)), len(term_vars(f.t2))], [1, 0])
    elif isinstance(f, Cong):
        edges = _blocks([len(term_vars(t)) for t in (f.t1, f.t2, f.t3, f.t4)], [0, 2, 1, 3])
    else:
        raise TypeError(f"not a primitive: {f!r}")
    return Diagram.build(src, tgt, edges)


def eval_diagram(f: ArrowTerm, theory: Theory) -> Diagram:
    """The functor G on arrow terms.  Typing errors propagate."""
    infer_type(f, theory)
    return _eval(f, theory)


def _eval(f: ArrowTerm, theory: Theory) -> Diagram:
    if isinstance(f, Compose):
        return compose(_eval(f.g, theory), _eval(f.f, theory))
    if isinstance(f, Tensor):
        return tensor(_eval(f.f, theory), _eval(f.g, theory))
    return primitive_diagram(f, theory)


# -- traced evaluation -------------------------------------------------------

# A strand piece is (path of a primitive, index of one of its local edges).
Piece = tuple[Path, int]


@dataclass
class Provenance:
    """Which primitive edges were fused into each edge (and loop) of a diagram."""

    edges: dict[Edge, tuple[Piece, ...]]
    loops: list[tuple[Piece, ...]]
    primitives: dict[Path, ArrowTerm]
    local: dict[Path, Diagram]

    def generator_paths(self, edge: Edge) -> list[Path]:
        return [p for p, _ in self.edges[edge]]

    def owners(self, edge: Edge, kind=None) -> list[Path]:
        """Primitives of the given class (default: Refl for caps, Trans for cups)."""
        if kind is None:
            kind = Refl if edge[0][0] == TGT else Trans
        return sorted({p for p in self.generator_paths(edge)
                       if isinstance(self.primitives[p], kind)})


@dataclass
class _Traced:
    d: Diagram
    prov: dict[Edge, tuple[Piece, ...]]
    loops: list[tuple[Piece, ...]]


def _trace(f: ArrowTerm, theory: Theory, path: Path, prims: dict, local: dict) -> _Traced:
    if isinstance(f, Tensor):
        a = _trace(f.f, theory, path + (Step.TL,), prims, local)
        b = _trace(f.g, theory, path + (Step.TR,), prims, local)
        d = tensor(a.d, b.d)
        ns, nt = len(a.d.src), len(a.d.tgt)
        shift = lambda e: (e[0], e[1] + (ns if e[0] == SRC else nt))
        prov = dict(a.prov)
        for (x, y), pieces in b.prov.items():
            prov[_edge(shift(x), shift(y))] = pieces
        return _Traced(d, prov, a.loops + b.loops)
    if isinstance(f, Compose):
        lo = _trace(f.f, theory, path + (Step.CR,), prims, local)
        up = _trace(f.g, theory, path + (Step.CL,), prims, local)
        d = compose(up.d, lo.d)
        lower, upper = lo.d.partner(), up.d.partner()
        pairs, cycles = _compose_partners(upper, lower, len(lo.d.tgt))
        prov = {}
        for start, end, mids in pairs:
            pieces = _walk_pieces(start, mids, lo, up)
            prov[_edge(_outer(start), _outer(end))] = pieces
        loops = lo.loops + up.loops
        for cyc in cycles:
            pieces = []
            for k in range(0, len(cyc), 2):
                m1, m2 = cyc[k], cyc[k + 1]
                pieces += lo.prov[_edge((TGT, m1), (TGT, m2))]
                nxt = cyc[(k + 2) % len(cyc)]
                pieces += up.prov[_edge((SRC, m2), (SRC, nxt))]
            loops.append(tuple(pieces))
        return _Traced(d, prov, loops)
    d = primitive_diagram(f, theory)
    prims[path] = f
    local[path] = d
    return _Traced(d, {e: ((path, k),) for k, e in enumerate(d.edges)}, [])


def _walk_pieces(start, mids, lo: _Traced, up: _Traced) -> tuple[Piece, ...]:
    pieces = []
    where, e = start
    for m in mids:
        if where == "f":
            pieces += lo.prov[_edge(e, (TGT, m))]
            where, e = "g", (SRC, m)
        else:
            pieces += up.prov[_edge(e, (SRC, m))]
            where, e = "f", (TGT, m)
    part = lo.d.partner() if where == "f" else up.d.partner()
    pieces += (lo.prov if where == "f" else up.prov)[_edge(e, part[e])]
    return tuple(pieces)


def eval_traced(f: ArrowTerm, theory: Theory) -> tuple[Diagram, Provenance]:
    infer_type(f, theory)
    prims, local = {}, {}
    t = _trace(f, theory, (), prims, local)
    return t.d, Provenance(t.prov, t.loops, prims, local)


# -- rendering ---------------------------------------------------------------

def to_dot(d: Diagram, name: str = "G") -> str:
    """Bipartite DOT graph: source row drawn above the target row, as in the figures."""
    lines = [f"graph {name} {{", "  rankdir=TB;", "  node [shape=plaintext];"]
    for side, labels in ((SRC, d.src), (TGT, d.tgt)):
        tag = "s" if side == SRC else "t"
        names = [f"{tag}{i}" for i in range(len(labels))]
        for n, v in zip(names, labels):
            lines.append(f'  {n} [label="{v.name}"];')
        if names:
            lines.append(f"  {{ rank=same; {'; '.join(names)}; }}")
        for a, b in zip(names, names[1:]):
            lines.append(f"  {a} -- {b} [style=invis];")
    if d.src and d.tgt:
        lines.append("  s0 -- t0 [style=invis, weight=10];")
    for a, b in d.edges:
        na = ("s" if a[0] == SRC else "t") + str(a[1])
        nb = ("s" if b[0] == SRC else "t") + str(b[1])
        style = ""
        if a[0] == b[0]:
            style = ' [constraint=false, label="cup"]' if a[0] == SRC else ' [constraint=false, label="cap"]'
        lines.append(f"  {na} -- {nb}{style};")
    lines.append("}")
    return "\n".join(lines)


def to_ascii(d: Diagram) -> str:
    src = " ".join(v.name for v in d.src) or "(empty)"
    tgt = " ".join(v.name for v in d.tgt) or "(empty)"
    out = [f"source: {src}", f"target: {tgt}"]
    for a, b in d.edges:
        kind = "line" if a[0] != b[0] else ("cup" if a[0] == SRC else "cap")
        fmt = lambda e: ("s" if e[0] == SRC else "t") + str(e[1])
        out.append(f"  {fmt(a)} -- {fmt(b)}  {kind} ({d.label(a).name})")
    if d.loops:
        out.append(f"loops discarded: {d.loops}")
    return "\n".join(out)


__all__ = [
    "Diagram", "SRC", "TGT", "InterfaceMismatch", "identity_diagram", "tensor", "compose",
    "primitive_diagram", "eval_diagram", "eval_traced", "Provenance", "to_dot", "to_ascii",
]
