"""Schema instances, random rewrite walks and bounded derivation search."""

from __future__ import annotations

import random
from collections import deque
from typing import Iterator, Sequence

from ..proofterm import (
    ArrowHole, ArrowTerm, ArrowType, BBwd, BFwd, Compose, Cong, DeltaBwd, DeltaFwd, Id, Inv,
    Path, Refl, SigmaBwd, SigmaFwd, Sym, Tensor, Theory, Trans, ast_size, infer_type,
    positions, random_term_from, replace_at, subterm,
)
from ..syntax import TOP, Atom, Conj, Formula, Hole, Product, Term, TermHole, Top, Var
from .derivation import find_step
from .equations import (
    Direction, EquationSchema, NoMatchAtPath, apply_equation, equation_table, instantiate, match,
)

MODES = ("distinct", "equal", "mixed")

# -- schema instances --------------------------------------------------------


class _Filler:
    """Chooses values for the holes of one schema in one mode."""

    def __init__(self, schema: EquationSchema, theory: Theory, mode: str, seed: int):
        self.schema, self.theory, self.mode = schema, theory, mode
        self.rng = random.Random(f"{schema.name}/{theory.value}/{mode}/{seed}")
        self.binding: dict = {}
        self.fresh = 0
        self.targets = {t.name for _, (_, t) in schema.typing if isinstance(t, Hole)}

    def var(self) -> Var:
        if self.mode == "equal":
            return Var("x")
        if self.mode == "distinct":
            self.fresh += 1
            return Var(f"x{self.fresh}")
        return self.rng.choice([Var("x"), Var("y")])

    def term(self) -> Term:
        if self.mode == "product":
            return Product(Product(self.var(), self.var()), self.var())
        return self.var()

    def formula(self) -> Formula:
        rel = self.theory.relation
        if self.mode == "mixed":
            k = self.rng.randrange(3)
            if k == 0:
                return TOP
            if k == 1:
                return Conj(Atom(rel, self.var(), self.var()), TOP)
        return Atom(rel, self.term(), self.term())

    def vars_for_arrows(self) -> list[Var]:
        return [Var("x")] if self.mode == "equal" else [Var("x"), Var("y")]

    def bind_free(self, pattern) -> None:
        if isinstance(pattern, TermHole):
            self.binding.setdefault((TermHole, pattern.name), self.term())
        elif isinstance(pattern, Hole):
            if pattern.name not in self.targets:
                self.binding.setdefault((Hole, pattern.name), self.formula())
        elif hasattr(pattern, "__dataclass_fields__") and not isinstance(pattern, ArrowHole):
            for name in pattern.__dataclass_fields__:
                self.bind_free(getattr(pattern, name))

    def arrow(self, source: Formula) -> ArrowTerm:
        size = self.rng.randint(1, 5)
        return random_term_from(self.theory, source, size, self.rng.randrange(2 ** 32),
                                self.vars_for_arrows())

    def fill(self, pattern: ArrowTerm, source: Formula | None) -> tuple[ArrowTerm, ArrowType]:
        th = self.theory
        if isinstance(pattern, Compose):
            lo, tlo = self.fill(pattern.f, source)
            hi, thi = self.fill(pattern.g, tlo.target)
            return Compose(hi, lo), ArrowType(tlo.source, thi.target)
        if isinstance(pattern, Tensor):
            ls = rs = None
            if isinstance(source, Conj):
                ls, rs = source.left, source.right
            a, ta = self.fill(pattern.f, ls)
            b, tb = self.fill(pattern.g, rs)
            return Tensor(a, b), ArrowType(Conj(ta.source, tb.source), Conj(ta.target, tb.target))
        if isinstance(pattern, ArrowHole):
            key = (ArrowHole, pattern.name)
            if key not in self.binding:
                typing = dict(self.schema.typing).get(pattern.name)
                if typing is not None:
                    src = instantiate(typing[0], self.binding)
                else:
                    src = source if source is not None else self.formula()
                f = self.arrow(src)
                self.binding[key] = f
                if typing is not None:
                    ty = infer_type(f, th)
                    match(typing[1], ty.target, self.binding)
            f = self.binding[key]
            return f, infer_type(f, th)
        f = instantiate(pattern, self.binding)
        return f, infer_type(f, th)


def instantiate_schema(schema: EquationSchema, theory: Theory, mode: str = "distinct",
                       seed: int = 0) -> tuple[ArrowTerm, ArrowTerm]:
    """A well-typed instance ``(lhs, rhs)`` of ``schema``.

    ``mode`` picks the index variables: ``distinct`` (all different), ``equal``
    (all ``x``), ``mixed`` (``x``/``y`` with some ``T`` and conjunction
    indices) or ``product`` (nested products, dotted theories only).
    """
    fl = _Filler(schema, theory, mode, seed)
    fl.bind_free(schema.lhs)
    for _, (src, _) in schema.typing:
        fl.bind_free(src)
    lhs, _ = fl.fill(schema.lhs, None)
    rhs = schema.rewrite(lhs, Direction.L2R, theory)
    if rhs is None:
        raise ValueError(f"instance of {schema.name} did not rewrite: {lhs}")
    return lhs, rhs


# -- one-step neighbourhoods -------------------------------------------------

Step = tuple[str, Path, Direction]


def rewrites(term: ArrowTerm, theory: Theory,
             table: Sequence[EquationSchema] | None = None) -> Iterator[tuple[Step, ArrowTerm]]:
    """Every single schema step applicable to ``term``, with its result."""
    table = equation_table(theory) if table is None else table
    for path in positions(term):
        sub = subterm(term, path)
        ty = None
        for schema in table:
            for d in (Direction.L2R, Direction.R2L):
                src = schema.sides(d)[0]
                if not isinstance(src, ArrowHole) and type(src) is not type(sub):
                    continue
                if ty is None:
                    ty = infer_type(sub, theory)
                out = schema.rewrite(sub, d, theory, ty)
                if out is not None and out != sub:
                    yield (schema.name, path, d), replace_at(term, path, out)


def random_walk(term: ArrowTerm, theory: Theory, steps: int, rng: random.Random,
                max_size: int | None = None) -> tuple[ArrowTerm, list[Step]]:
    """Apply ``steps`` randomly chosen applicable schema steps.

    Candidate (path, schema, direction) triples are tried in random order and
    the first that applies is taken; the walk stops early if none applies.
    """
    table = equation_table(theory)
    trace = []
    for _ in range(steps):
        cands = [(p, s, d) for p in positions(term) for s in table
                 for d in (Direction.L2R, Direction.R2L)]
        rng.shuffle(cands)
        for path, schema, d in cands:
            sub = subterm(term, path)
            src = schema.sides(d)[0]
            if not isinstance(src, ArrowHole) and type(src) is not type(sub):
                continue
            out = schema.rewrite(sub, d, theory)
            if out is None or out == sub:
                continue
            nxt = replace_at(term, path, out)
            if max_size is not None and ast_size(nxt) > max_size:
                continue
            term = nxt
            trace.append((schema.name, path, d))
            break
        else:
            break
    return term, trace


def connect(a: ArrowTerm, b: ArrowTerm, theory: Theory, max_size: int = 10,
            budget: int = 100_000) -> list[Step] | None:
    """Bidirectional breadth-first search for a derivation from ``a`` to ``b``.

    Intermediate terms are kept within ``max_size`` nodes and at most ``budget``
    terms are visited in total.  Returns the steps from ``a`` to ``b`` (steps
    found from the ``b`` side are reversed), or ``None``.
    """
    if a == b:
        return []
    table = equation_table(theory)
    seen = [{a: None}, {b: None}]
    frontier = [deque([a]), deque([b])]
    visited = 2
    while frontier[0] and frontier[1]:
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        for _ in range(len(frontier[side])):
            cur = frontier[side].popleft()
            for step, nxt in rewrites(cur, theory, table):
                if ast_size(nxt) > max_size or nxt in seen[side]:
                    continue
                seen[side][nxt] = (cur, step)
                if nxt in seen[1 - side]:
                    return _join(seen, nxt, theory)
                visited += 1
                if visited > budget:
                    return None
                frontier[side].append(nxt)
    return None


def _trail(seen: dict, t: ArrowTerm) -> list[tuple[ArrowTerm, Step, ArrowTerm]]:
    out = []
    while seen[t] is not None:
        prev, step = seen[t]
        out.append((prev, step, t))
        t = prev
    return out[::-1]


def _join(seen: list[dict], meet: ArrowTerm, theory: Theory) -> list[Step]:
    fwd = [s for _, s, _ in _trail(seen[0], meet)]
    bwd = []
    for prev, (name, path, d), cur in reversed(_trail(seen[1], meet)):
        # undo prev -> cur; the flipped step normally does it
        step = (name, path, d.flip())
        try:
            ok = apply_equation(cur, name, path, d.flip(), theory) == prev
        except NoMatchAtPath:
            ok = False
        if not ok:
            step = find_step(cur, prev, theory)
        bwd.append(step)
    return fwd + bwd


# -- exhaustive enumeration --------------------------------------------------

def _leaves(a: Formula, theory: Theory, vars: Sequence[Var]) -> list[ArrowTerm]:
    out: list[ArrowTerm] = [Id(a), DeltaBwd(a), SigmaBwd(a)]
    if isinstance(a, Top):
        out += [Refl(v) for v in vars]
    if isinstance(a, Conj):
        l, r = a.left, a.right
        if isinstance(r, Conj):
            out.append(BFwd(l, r.left, r.right))
        if isinstance(l, Conj):
            out.append(BBwd(l.left, l.right, r))
        if isinstance(r, Top):
            out.append(DeltaFwd(l))
        if isinstance(l, Top):
            out.append(SigmaFwd(r))
        if theory.symmetric:
            out.append(Sym(l, r))
        if isinstance(l, Atom) and isinstance(r, Atom):
            if l.rhs == r.lhs:
                out.append(Trans(l.lhs, l.rhs, r.rhs))
            if theory.dotted:
                out.append(Cong(l.lhs, l.rhs, r.lhs, r.rhs))
    if isinstance(a, Atom) and theory.has_s:
        out.append(Inv(a.lhs, a.rhs))
    return out


def enumerate_from(source: Formula, theory: Theory, max_size: int,
                   vars: Sequence[Var | str] = ("x",)) -> list[tuple[ArrowTerm, Formula]]:
    """All well-typed terms with the given source and at most ``max_size`` nodes."""
    vs = [Var(v) if isinstance(v, str) else v for v in vars]
    memo: dict[tuple[Formula, int], list[tuple[ArrowTerm, Formula]]] = {}

    def exact(a: Formula, n: int) -> list[tuple[ArrowTerm, Formula]]:
        key = (a, n)
        if key in memo:
            return memo[key]
        out = []
        if n == 1:
            out = [(f, infer_type(f, theory).target) for f in _leaves(a, theory, vs)]
        else:
            if isinstance(a, Conj):
                for k in range(1, n - 1):
                    for f, tf in exact(a.left, k):
                        for g, tg in exact(a.right, n - 1 - k):
                            out.append((Tensor(f, g), Conj(tf, tg)))
            for k in range(1, n - 1):
                for f, tf in exact(a, k):
                    for g, tg in exact(tf, n - 1 - k):
                        out.append((Compose(g, f), tg))
        memo[key] = out
        return out

    return [p for n in range(1, max_size + 1) for p in exact(source, n)]
