"""Equation-tagged rewrite traces and the stateful rewriter used by the passes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..proofterm import (
    ArrowTerm, Compose, Path, Step, Tensor, Theory, ast_size, path_from_json,
    path_json, subterm,
)
from ..text import parse_arrow, show_arrow
from .equations import Direction, NoMatchAtPath, apply_equation, equation_table


class BudgetExceeded(RuntimeError):
    """A pass ran out of rewrite steps before reaching its normal form."""


@dataclass(frozen=True)
class DerivationStep:
    eq: str
    path: Path
    direction: Direction
    term: ArrowTerm

    def to_json(self) -> dict:
        return {"eq": self.eq, "path": path_json(self.path), "dir": self.direction.value,
                "term": show_arrow(self.term)}


@dataclass
class Derivation:
    start: ArrowTerm
    steps: list[DerivationStep] = field(default_factory=list)

    @property
    def end(self) -> ArrowTerm:
        return self.steps[-1].term if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]

    @classmethod
    def from_json(cls, start: ArrowTerm, items: Iterable[dict]) -> "Derivation":
        steps = [DerivationStep(d["eq"], path_from_json(d["path"]), Direction(d["dir"]),
                                parse_arrow(d["term"])) for d in items]
        return cls(start, steps)

    def replay(self, theory: Theory) -> ArrowTerm:
        """Re-apply every step; raises if any recorded result disagrees."""
        cur = self.start
        for i, s in enumerate(self.steps):
            cur = apply_equation(cur, s.eq, s.path, s.direction, theory)
            if cur != s.term:
                raise ValueError(f"step {i} ({s.eq}) does not reproduce the recorded term")
        return cur


def default_budget(f: ArrowTerm) -> int:
    n = ast_size(f)
    return 10 * n * n


class Rewriter:
    """Current term plus the derivation that produced it, under a step budget."""

    def __init__(self, term: ArrowTerm, theory: Theory, budget: int | None = None):
        self.theory = theory
        self.term = term
        self.derivation = Derivation(term)
        self.budget = default_budget(term) if budget is None else budget

    def at(self, path: Sequence[Step]) -> ArrowTerm:
        return subterm(self.term, path)

    def apply(self, eq: str, path: Sequence[Step], direction: Direction) -> ArrowTerm:
        if len(self.derivation.steps) >= self.budget:
            raise BudgetExceeded(f"step budget of {self.budget} exhausted")
        self.term = apply_equation(self.term, eq, tuple(path), direction, self.theory)
        self.derivation.steps.append(DerivationStep(eq, tuple(path), direction, self.term))
        return self.term

    def l2r(self, eq: str, path: Sequence[Step] = ()) -> ArrowTerm:
        return self.apply(eq, path, Direction.L2R)

    def r2l(self, eq: str, path: Sequence[Step] = ()) -> ArrowTerm:
        return self.apply(eq, path, Direction.R2L)

    def replay(self, steps: Iterable[tuple[str, Path, Direction]], prefix: Sequence[Step] = ()):
        prefix = tuple(prefix)
        for eq, path, d in steps:
            self.apply(eq, prefix + tuple(path), d)


# -- searching for single steps ----------------------------------------------

def diff_path(a: ArrowTerm, b: ArrowTerm) -> Path | None:
    """Deepest position above which ``a`` and ``b`` agree, or ``None`` if equal."""
    if a == b:
        return None
    path: list[Step] = []
    while True:
        if isinstance(a, Compose) and isinstance(b, Compose):
            if a.g == b.g:
                path.append(Step.CR)
                a, b = a.f, b.f
                continue
            if a.f == b.f:
                path.append(Step.CL)
                a, b = a.g, b.g
                continue
        if isinstance(a, Tensor) and isinstance(b, Tensor):
            if a.f == b.f:
                path.append(Step.TR)
                a, b = a.g, b.g
                continue
            if a.g == b.g:
                path.append(Step.TL)
                a, b = a.f, b.f
                continue
        return tuple(path)


def one_step(a: ArrowTerm, b: ArrowTerm, theory: Theory,
             names: Sequence[str] | None = None) -> tuple[str, Path, Direction] | None:
    """A single schema instance rewriting ``a`` into ``b``, if there is one."""
    d = diff_path(a, b)
    if d is None:
        return None
    table = [s for s in equation_table(theory) if names is None or s.name in names]
    for k in range(len(d), -1, -1):
        pos = d[:k]
        sub = subterm(a, pos)
        target = subterm(b, pos)
        for schema in table:
            for direction in (Direction.L2R, Direction.R2L):
                if schema.rewrite(sub, direction, theory) == target:
                    return schema.name, pos, direction
    return None


def find_step(a: ArrowTerm, b: ArrowTerm, theory: Theory) -> tuple[str, Path, Direction]:
    step = one_step(a, b, theory)
    if step is None:
        raise NoMatchAtPath(f"no single step from {show_arrow(a)} to {show_arrow(b)}")
    return step
