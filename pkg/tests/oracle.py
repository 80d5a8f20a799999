"""Independent reference semantics for the tests.

Builds one graph over every occurrence node of every layer of a term, glues
composition interfaces, and reads the matching off the connected components
with a union-find.  Shares no code with the library's diagram module.
"""

from __future__ import annotations

import random

from lineq.proofterm import (
    BBwd, BFwd, Compose, Cong, DeltaBwd, DeltaFwd, Id, Inv, Refl, SigmaBwd, SigmaFwd, Sym,
    Tensor, Trans,
)
from lineq.syntax import Atom, Conj, Product


def term_occ(t) -> list[str]:
    if isinstance(t, Product):
        return term_occ(t.left) + term_occ(t.right)
    return [t.name]


def formula_occ(a) -> list[str]:
    if isinstance(a, Atom):
        return term_occ(a.lhs) + term_occ(a.rhs)
    if isinstance(a, Conj):
        return formula_occ(a.left) + formula_occ(a.right)
    return []


class UnionFind:
    def __init__(self):
        self.parent: list[int] = []

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def _prim(f, uf: UnionFind, labels: list[str]):
    """Source nodes, target nodes, and the glued pairs of one generator."""

    def nodes(names):
        out = []
        for n in names:
            out.append(uf.add())
            labels.append(n)
        return out

    straight = (Id, BFwd, BBwd, DeltaFwd, DeltaBwd, SigmaFwd, SigmaBwd)
    if isinstance(f, straight):
        occ = [x for a in _fields(f) for x in formula_occ(a)]
        s, t = nodes(occ), nodes(occ)
        pairs = list(zip(s, t))
    elif isinstance(f, Sym):
        a, b = formula_occ(f.a), formula_occ(f.b)
        s, t = nodes(a + b), nodes(b + a)
        pairs = list(zip(s[:len(a)], t[len(b):])) + list(zip(s[len(a):], t[:len(b)]))
    elif isinstance(f, Refl):
        k = term_occ(f.t)
        s, t = [], nodes(k + k)
        pairs = list(zip(t[:len(k)], t[len(k):]))
    elif isinstance(f, Trans):
        a, b, c = term_occ(f.t1), term_occ(f.t2), term_occ(f.t3)
        s, t = nodes(a + b + b + c), nodes(a + c)
        pairs = list(zip(s[:len(a)], t[:len(a)]))
        pairs += list(zip(s[len(a):len(a) + len(b)], s[len(a) + len(b):len(a) + 2 * len(b)]))
        pairs += list(zip(s[len(a) + 2 * len(b):], t[len(a):]))
    elif isinstance(f, Inv):
        a, b = term_occ(f.t1), term_occ(f.t2)
        s, t = nodes(a + b), nodes(b + a)
        pairs = list(zip(s[:len(a)], t[len(b):])) + list(zip(s[len(a):], t[:len(b)]))
    elif isinstance(f, Cong):
        blocks = [term_occ(x) for x in (f.t1, f.t2, f.t3, f.t4)]
        s = nodes([x for b in blocks for x in b])
        order = [0, 2, 1, 3]
        t = nodes([x for i in order for x in blocks[i]])
        start = [0]
        for b in blocks:
            start.append(start[-1] + len(b))
        pairs, pos = [], 0
        for i in order:
            for j in range(len(blocks[i])):
                pairs.append((s[start[i] + j], t[pos]))
                pos += 1
    else:
        raise TypeError(f)
    return s, t, pairs


def _fields(f):
    return [getattr(f, n) for n in f.__dataclass_fields__]


def oracle_diagram(f) -> dict:
    """``{"source", "target", "edges", "loops"}`` with edges as frozensets of ("s"|"t", i)."""
    uf, labels = UnionFind(), []

    def build(g):
        if isinstance(g, Compose):
            s1, t1 = build(g.f)
            s2, t2 = build(g.g)
            assert len(t1) == len(s2)
            for a, b in zip(t1, s2):
                assert labels[a] == labels[b]
                uf.union(a, b)
            return s1, t2
        if isinstance(g, Tensor):
            s1, t1 = build(g.f)
            s2, t2 = build(g.g)
            return s1 + s2, t1 + t2
        s, t, pairs = _prim(g, uf, labels)
        for a, b in pairs:
            uf.union(a, b)
        return s, t

    src, tgt = build(f)
    ends = {}
    for i, n in enumerate(src):
        ends.setdefault(uf.find(n), []).append(("s", i))
    for j, n in enumerate(tgt):
        ends.setdefault(uf.find(n), []).append(("t", j))
    edges = set()
    for group in ends.values():
        assert len(group) == 2, group
        edges.add(frozenset(group))
    roots = {uf.find(n) for n in range(len(uf.parent))}
    loops = len(roots - set(ends))
    return {"source": [labels[n] for n in src], "target": [labels[n] for n in tgt],
            "edges": edges, "loops": loops}


def as_oracle(d) -> dict:
    """A library Diagram in the oracle's format."""
    tag = "st"
    return {"source": [v.name for v in d.src], "target": [v.name for v in d.tgt],
            "edges": {frozenset({(tag[a[0]], a[1]), (tag[b[0]], b[1])}) for a, b in d.edges},
            "loops": d.loops}


# -- raw matchings -----------------------------------------------------------

def random_matching(rng: random.Random, n_src: int, n_tgt: int) -> list[tuple]:
    pts = [("s", i) for i in range(n_src)] + [("t", j) for j in range(n_tgt)]
    rng.shuffle(pts)
    return [(pts[k], pts[k + 1]) for k in range(0, len(pts), 2)]


def oracle_compose(upper: list[tuple], lower: list[tuple], n_src: int, n_mid: int,
                   n_tgt: int) -> tuple[set, int]:
    """Compose raw matchings: ``lower`` is n_src -> n_mid, ``upper`` n_mid -> n_tgt."""
    uf = UnionFind()
    src = [uf.add() for _ in range(n_src)]
    mid = [uf.add() for _ in range(n_mid)]
    tgt = [uf.add() for _ in range(n_tgt)]
    lo = {"s": src, "t": mid}
    up = {"s": mid, "t": tgt}
    for (a, i), (b, j) in lower:
        uf.union(lo[a][i], lo[b][j])
    for (a, i), (b, j) in upper:
        uf.union(up[a][i], up[b][j])
    ends = {}
    for i, n in enumerate(src):
        ends.setdefault(uf.find(n), []).append(("s", i))
    for j, n in enumerate(tgt):
        ends.setdefault(uf.find(n), []).append(("t", j))
    edges = {frozenset(g) for g in ends.values()}
    loops = len({uf.find(n) for n in mid} - set(ends))
    return edges, loops
