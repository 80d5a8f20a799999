"""Arrow terms of the six calculi and their typing."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .syntax import (
    TOP, Atom, Conj, Formula, Hole, Product, Rel, Renaming, Term, TermHole, Top, Var,
    contains_top, rename_formula, rename_term, top_purge,
)


class Theory(enum.Enum):
    M_LEQ = "m-leq"
    S_LEQ = "s-leq"
    M_EQUIV = "m-equiv"
    S_EQUIV = "s-equiv"
    SDOT_LEQ = "sdot-leq"
    SDOT_EQUIV = "sdot-equiv"

    @property
    def relation(self) -> Rel:
        return Rel.EQUIV if self.name.endswith("EQUIV") else Rel.LEQ

    @property
    def symmetric(self) -> bool:
        return self not in (Theory.M_LEQ, Theory.M_EQUIV)

    @property
    def has_s(self) -> bool:
        return self.relation is Rel.EQUIV

    @property
    def dotted(self) -> bool:
        return self in (Theory.SDOT_LEQ, Theory.SDOT_EQUIV)

    @classmethod
    def parse(cls, name: str) -> "Theory":
        try:
            return cls(name.lower())
        except ValueError:
            return cls[name.upper()]


# -- arrow terms -------------------------------------------------------------

@dataclass(frozen=True)
class Id:
    a: Formula


@dataclass(frozen=True)
class BFwd:
    a: Formula
    b: Formula
    c: Formula


@dataclass(frozen=True)
class BBwd:
    a: Formula
    b: Formula
    c: Formula


@dataclass(frozen=True)
class DeltaFwd:
    a: Formula


@dataclass(frozen=True)
class DeltaBwd:
    a: Formula


@dataclass(frozen=True)
class SigmaFwd:
    a: Formula


@dataclass(frozen=True)
class SigmaBwd:
    a: Formula


@dataclass(frozen=True)
class Sym:
    a: Formula
    b: Formula


@dataclass(frozen=True)
class Refl:
    t: Term


@dataclass(frozen=True)
class Trans:
    t1: Term
    t2: Term
    t3: Term


@dataclass(frozen=True)
class Inv:
    t1: Term
    t2: Term


@dataclass(frozen=True)
class Cong:
    t1: Term
    t2: Term
    t3: Term
    t4: Term


@dataclass(frozen=True)
class Compose:
    """``g o f``: first ``f``, then ``g``."""

    g: "ArrowTerm"
    f: "ArrowTerm"


@dataclass(frozen=True)
class Tensor:
    f: "ArrowTerm"
    g: "ArrowTerm"


@dataclass(frozen=True)
class ArrowHole:
    """Arrow placeholder; a metavariable in equation patterns."""

    name: str


STRUCTURAL = (Id, BFwd, BBwd, DeltaFwd, DeltaBwd, SigmaFwd, SigmaBwd, Sym)
PRIMITIVES = STRUCTURAL + (Refl, Trans, Inv, Cong)

ArrowTerm = Union[
    Id, BFwd, BBwd, DeltaFwd, DeltaBwd, SigmaFwd, SigmaBwd, Sym,
    Refl, Trans, Inv, Cong, Compose, Tensor, ArrowHole,
]


def is_primitive(f: ArrowTerm) -> bool:
    return isinstance(f, PRIMITIVES)


@dataclass(frozen=True)
class ArrowType:
    source: Formula
    target: Formula

    def __str__(self):
        from .text import show_formula
        return f"{show_formula(self.source)} |- {show_formula(self.target)}"


# -- paths -------------------------------------------------------------------

class Step(enum.Enum):
    CL = "CL"   # left operand (g) of a composition g o f
    CR = "CR"   # right operand (f)
    TL = "TL"
    TR = "TR"


Path = tuple[Step, ...]


def subterm(f: ArrowTerm, path: Sequence[Step]) -> ArrowTerm:
    for step in path:
        if step is Step.CL and isinstance(f, Compose):
            f = f.g
        elif step is Step.CR and isinstance(f, Compose):
            f = f.f
        elif step is Step.TL and isinstance(f, Tensor):
            f = f.f
        elif step is Step.TR and isinstance(f, Tensor):
            f = f.g
        else:
            raise KeyError(f"path step {step.value} does not resolve")
    return f


def replace_at(f: ArrowTerm, path: Sequence[Step], new: ArrowTerm) -> ArrowTerm:
    if not path:
        return new
    step, rest = path[0], path[1:]
    if step is Step.CL and isinstance(f, Compose):
        return Compose(replace_at(f.g, rest, new), f.f)
    if step is Step.CR and isinstance(f, Compose):
        return Compose(f.g, replace_at(f.f, rest, new))
    if step is Step.TL and isinstance(f, Tensor):
        return Tensor(replace_at(f.f, rest, new), f.g)
    if step is Step.TR and isinstance(f, Tensor):
        return Tensor(f.f, replace_at(f.g, rest, new))
    raise KeyError(f"path step {step.value} does not resolve")


def positions(f: ArrowTerm, prefix: Path = ()) -> Iterator[Path]:
    """All subterm paths, preorder."""
    yield prefix
    if isinstance(f, Compose):
        yield from positions(f.g, prefix + (Step.CL,))
        yield from positions(f.f, prefix + (Step.CR,))
    elif isinstance(f, Tensor):
        yield from positions(f.f, prefix + (Step.TL,))
        yield from positions(f.g, prefix + (Step.TR,))


def ast_size(f: ArrowTerm) -> int:
    if isinstance(f, (Compose, Tensor)):
        a, b = (f.g, f.f) if isinstance(f, Compose) else (f.f, f.g)
        return 1 + ast_size(a) + ast_size(b)
    return 1


def path_json(path: Sequence[Step]) -> list[str]:
    return [s.value for s in path]


def path_from_json(items: Sequence[str]) -> Path:
    return tuple(Step(s) for s in items)


# -- typing ------------------------------------------------------------------

class TypingError(Exception):
    pass


class CompositionMismatch(TypingError):
    def __init__(self, expected: Formula, found: Formula, path: Path):
        from .text import show_formula
        self.expected, self.found, self.path = expected, found, path
        super().__init__(
            f"composition mismatch at {path_json(path)}: "
            f"expected {show_formula(expected)}, found {show_formula(found)}")


class GeneratorNotInTheory(TypingError):
    def __init__(self, generator: str, theory: Theory):
        self.generator, self.theory = generator, theory
        super().__init__(f"generator {generator} is not available in {theory.value}")


class RelationMismatch(TypingError):
    def __init__(self, atom: Atom, theory: Theory):
        self.atom, self.theory = atom, theory
        super().__init__(
            f"atom uses {atom.rel.value} but {theory.value} uses {theory.relation.value}")


def _check_term(t: Term, theory: Theory) -> None:
    if isinstance(t, Product):
        if not theory.dotted:
            raise GeneratorNotInTheory("product term", theory)
        _check_term(t.left, theory)
        _check_term(t.right, theory)


def check_formula(a: Formula, theory: Theory) -> None:
    """Raise unless ``a`` is an object of ``theory``."""
    if isinstance(a, Atom):
        if a.rel is not theory.relation:
            raise RelationMismatch(a, theory)
        _check_term(a.lhs, theory)
        _check_term(a.rhs, theory)
    elif isinstance(a, Conj):
        check_formula(a.left, theory)
        check_formula(a.right, theory)


def _atom(theory: Theory, lhs: Term, rhs: Term) -> Atom:
    return Atom(theory.relation, lhs, rhs)


def primitive_type(f: ArrowTerm, theory: Theory) -> ArrowType:
    """Signature of a primitive arrow term; admissibility is checked here."""
    if isinstance(f, Id):
        check_formula(f.a, theory)
        return ArrowType(f.a, f.a)
    if isinstance(f, (BFwd, BBwd)):
        for x in (f.a, f.b, f.c):
            check_formula(x, theory)
        right = Conj(f.a, Conj(f.b, f.c))
        left = Conj(Conj(f.a, f.b), f.c)
        return ArrowType(right, left) if isinstance(f, BFwd) else ArrowType(left, right)
    if isinstance(f, (DeltaFwd, DeltaBwd)):
        check_formula(f.a, theory)
        t = ArrowType(Conj(f.a, TOP), f.a)
        return t if isinstance(f, DeltaFwd) else ArrowType(t.target, t.source)
    if isinstance(f, (SigmaFwd, SigmaBwd)):
        check_formula(f.a, theory)
        t = ArrowType(Conj(TOP, f.a), f.a)
        return t if isinstance(f, SigmaFwd) else ArrowType(t.target, t.source)
    if isinstance(f, Sym):
        if not theory.symmetric:
            raise GeneratorNotInTheory("c", theory)
        check_formula(f.a, theory)
        check_formula(f.b, theory)
        return ArrowType(Conj(f.a, f.b), Conj(f.b, f.a))
    if isinstance(f, Refl):
        _check_term(f.t, theory)
        return ArrowType(TOP, _atom(theory, f.t, f.t))
    if isinstance(f, Trans):
        for t in (f.t1, f.t2, f.t3):
            _check_term(t, theory)
        return ArrowType(
            Conj(_atom(theory, f.t1, f.t2), _atom(theory, f.t2, f.t3)),
            _atom(theory, f.t1, f.t3))
    if isinstance(f, Inv):
        if not theory.has_s:
            raise GeneratorNotInTheory("s", theory)
        _check_term(f.t1, theory)
        _check_term(f.t2, theory)
        return ArrowType(_atom(theory, f.t1, f.t2), _atom(theory, f.t2, f.t1))
    if isinstance(f, Cong):
        if not theory.dotted:
            raise GeneratorNotInTheory("a", theory)
        for t in (f.t1, f.t2, f.t3, f.t4):
            _check_term(t, theory)
        return ArrowType(
            Conj(_atom(theory, f.t1, f.t2), _atom(theory, f.t3, f.t4)),
            _atom(theory, Product(f.t1, f.t3), Product(f.t2, f.t4)))
    raise TypingError(f"not a primitive arrow term: {f!r}")


def infer_type(f: ArrowTerm, theory: Theory, path: Path = ()) -> ArrowType:
    """The type ``A |- B`` of ``f`` in ``theory``, or a :class:`TypingError`."""
    if isinstance(f, Compose):
        tf = infer_type(f.f, theory, path + (Step.CR,))
        tg = infer_type(f.g, theory, path + (Step.CL,))
        if tf.target != tg.source:
            raise CompositionMismatch(tg.source, tf.target, path)
        return ArrowType(tf.source, tg.target)
    if isinstance(f, Tensor):
        t1 = infer_type(f.f, theory, path + (Step.TL,))
        t2 = infer_type(f.g, theory, path + (Step.TR,))
        return ArrowType(Conj(t1.source, t2.source), Conj(t1.target, t2.target))
    return primitive_type(f, theory)


def well_typed(f: ArrowTerm, theory: Theory) -> bool:
    try:
        infer_type(f, theory)
    except TypingError:
        return False
    return True


def generator_name(f: ArrowTerm) -> str:
    return {
        Id: "1", BFwd: "b>", BBwd: "b<", DeltaFwd: "del>", DeltaBwd: "del<",
        SigmaFwd: "sig>", SigmaBwd: "sig<", Sym: "c", Refl: "r", Trans: "t",
        Inv: "s", Cong: "a",
    }[type(f)]


# -- renaming ----------------------------------------------------------------

def rename_arrow(f: ArrowTerm, rho: Renaming) -> ArrowTerm:
    if isinstance(f, Compose):
        return Compose(rename_arrow(f.g, rho), rename_arrow(f.f, rho))
    if isinstance(f, Tensor):
        return Tensor(rename_arrow(f.f, rho), rename_arrow(f.g, rho))
    if isinstance(f, (Refl, Trans, Inv, Cong)):
        return type(f)(*(rename_term(t, rho) for t in _fields(f)))
    if isinstance(f, ArrowHole):
        return f
    return type(f)(*(rename_formula(a, rho) for a in _fields(f)))


def _fields(f) -> tuple:
    return tuple(getattr(f, name) for name in f.__dataclass_fields__)


def arrow_fields(f: ArrowTerm) -> tuple:
    """Index arguments of a primitive (formulas or terms)."""
    return _fields(f)


# -- top purging isomorphism -------------------------------------------------

def _compose_all(parts: list[ArrowTerm]) -> ArrowTerm | None:
    """``parts`` listed in application order; identities are dropped."""
    parts = [p for p in parts if p is not None and not isinstance(p, Id)]
    if not parts:
        return None
    out = parts[0]
    for p in parts[1:]:
        out = Compose(p, out)
    return out


def _phi(a: Formula) -> ArrowTerm | None:
    if not isinstance(a, Conj):
        return None
    lp, rp = top_purge(a.left), top_purge(a.right)
    if isinstance(rp, Top):
        inner = _phi(a.right)
        pad = Tensor(Id(a.left), inner) if inner is not None else None
        return _compose_all([pad, DeltaFwd(a.left), _phi(a.left)])
    if isinstance(lp, Top):
        inner = _phi(a.left)
        pad = Tensor(inner, Id(a.right)) if inner is not None else None
        return _compose_all([pad, SigmaFwd(a.right), _phi(a.right)])
    fl, fr = _phi(a.left), _phi(a.right)
    if fl is None and fr is None:
        return None
    return Tensor(fl or Id(a.left), fr or Id(a.right))


def _mirror(f: ArrowTerm) -> ArrowTerm:
    if isinstance(f, Compose):
        return Compose(_mirror(f.f), _mirror(f.g))
    if isinstance(f, Tensor):
        return Tensor(_mirror(f.f), _mirror(f.g))
    flip = {DeltaFwd: DeltaBwd, DeltaBwd: DeltaFwd, SigmaFwd: SigmaBwd,
            SigmaBwd: SigmaFwd, BFwd: BBwd, BBwd: BFwd, Id: Id}
    if type(f) in flip:
        return flip[type(f)](*_fields(f))
    raise ValueError(f"no mirror for {f!r}")


def top_iso(a: Formula, theory: Theory) -> ArrowTerm:
    """Canonical isomorphism ``a |- top_purge(a)`` built from b, delta, sigma."""
    check_formula(a, theory)
    return _phi(a) or Id(a)


def top_iso_inverse(a: Formula, theory: Theory) -> ArrowTerm:
    """Mirror of :func:`top_iso`, of type ``top_purge(a) |- a``."""
    return _mirror(top_iso(a, theory))


# -- random generation -------------------------------------------------------

class _Gen:
    def __init__(self, theory: Theory, rng: random.Random, vars: Sequence[Var]):
        self.theory, self.rng, self.vars = theory, rng, list(vars)

    def term(self, depth: int = 0) -> Term:
        if self.theory.dotted and depth < 2 and self.rng.random() < 0.25:
            return Product(self.term(depth + 1), self.term(depth + 1))
        return self.rng.choice(self.vars)

    def atom(self) -> Atom:
        return Atom(self.theory.relation, self.term(), self.term())

    def formula(self, depth: int = 0) -> Formula:
        u = self.rng.random()
        if depth >= 2 or u < 0.55:
            return self.atom()
        if u < 0.7:
            return TOP
        return Conj(self.formula(depth + 1), self.formula(depth + 1))

    def kinds(self) -> list[str]:
        out = ["id", "b>", "b<", "del>", "del<", "sig>", "sig<", "r", "t", "t", "r"]
        if self.theory.symmetric:
            out.append("c")
        if self.theory.has_s:
            out += ["s", "s"]
        if self.theory.dotted:
            out += ["a", "a"]
        return out

    def free_leaf(self) -> ArrowTerm:
        k = self.rng.choice(self.kinds())
        F = self.formula
        if k == "id":
            return Id(F())
        if k == "b>":
            return BFwd(F(1), F(1), F(1))
        if k == "b<":
            return BBwd(F(1), F(1), F(1))
        if k in ("del>", "del<", "sig>", "sig<"):
            cls = {"del>": DeltaFwd, "del<": DeltaBwd, "sig>": SigmaFwd, "sig<": SigmaBwd}[k]
            return cls(F(1))
        if k == "c":
            return Sym(F(1), F(1))
        if k == "r":
            return Refl(self.term())
        if k == "t":
            return Trans(self.term(), self.term(), self.term())
        if k == "s":
            return Inv(self.term(), self.term())
        return Cong(self.term(), self.term(), self.term(), self.term())

    def leaves_from(self, a: Formula) -> list[ArrowTerm]:
        th = self.theory
        out: list[ArrowTerm] = [DeltaBwd(a), SigmaBwd(a)]
        if isinstance(a, Top):
            out += [Refl(self.term()), Refl(self.term())]
        if isinstance(a, Conj):
            l, r = a.left, a.right
            if isinstance(r, Conj):
                out.append(BFwd(l, r.left, r.right))
            if isinstance(l, Conj):
                out.append(BBwd(l.left, l.right, r))
            if isinstance(r, Top):
                out += [DeltaFwd(l), DeltaFwd(l)]
            if isinstance(l, Top):
                out += [SigmaFwd(r), SigmaFwd(r)]
            if th.symmetric:
                out.append(Sym(l, r))
            if isinstance(l, Atom) and isinstance(r, Atom):
                if l.rhs == r.lhs:
                    out += [Trans(l.lhs, l.rhs, r.rhs)] * 3
                if th.dotted:
                    out.append(Cong(l.lhs, l.rhs, r.lhs, r.rhs))
        if isinstance(a, Atom) and th.has_s:
            out += [Inv(a.lhs, a.rhs)] * 2
        return out

    def free(self, budget: int) -> ArrowTerm:
        if budget < 3 or self.rng.random() < 0.2:
            return self.free_leaf()
        if self.rng.random() < 0.65:
            k = self.rng.randint(1, budget - 2)
            f = self.free(k)
            rest = budget - 1 - ast_size(f)
            tf = infer_type(f, self.theory)
            return Compose(self.from_source(tf.target, rest), f)
        k = self.rng.randint(1, budget - 2)
        f = self.free(k)
        return Tensor(f, self.free(budget - 1 - ast_size(f)))

    def from_source(self, a: Formula, budget: int) -> ArrowTerm:
        if budget >= 3 and self.rng.random() < 0.6:
            if isinstance(a, Conj) and self.rng.random() < 0.5:
                k = self.rng.randint(1, budget - 2)
                f = self.from_source(a.left, k)
                return Tensor(f, self.from_source(a.right, budget - 1 - ast_size(f)))
            k = self.rng.randint(1, budget - 2)
            f = self.from_source(a, k)
            tf = infer_type(f, self.theory)
            return Compose(self.from_source(tf.target, budget - 1 - ast_size(f)), f)
        if self.rng.random() < 0.1:
            return Id(a)
        return self.rng.choice(self.leaves_from(a))


def random_term(theory: Theory, size_budget: int, seed: int,
                vars: Sequence[Var | str]) -> ArrowTerm:
    """A well-typed arrow term of ``theory`` with at most ``size_budget`` nodes.

    Deterministic in its arguments; composition sites are filled by choosing the
    outer arrow after the inner arrow's target is known.
    """
    if size_budget < 1:
        raise ValueError("size_budget must be positive")
    vs = [Var(v) if isinstance(v, str) else v for v in vars]
    if not vs:
        raise ValueError("need at least one variable")
    rng = random.Random(seed)
    return _Gen(theory, rng, vs).free(size_budget)


def random_term_from(theory: Theory, source: Formula, size_budget: int, seed: int,
                     vars: Sequence[Var | str]) -> ArrowTerm:
    """Like :func:`random_term` but with a prescribed source formula."""
    vs = [Var(v) if isinstance(v, str) else v for v in vars]
    return _Gen(theory, random.Random(seed), vs).from_source(source, size_budget)


def random_formula(theory: Theory, seed: int, vars: Sequence[Var | str]) -> Formula:
    vs = [Var(v) if isinstance(v, str) else v for v in vars]
    return _Gen(theory, random.Random(seed), vs).formula()


__all__ = [
    "Theory", "Id", "BFwd", "BBwd", "DeltaFwd", "DeltaBwd", "SigmaFwd", "SigmaBwd",
    "Sym", "Refl", "Trans", "Inv", "Cong", "Compose", "Tensor", "ArrowHole",
    "ArrowTerm", "ArrowType", "Step", "Path", "TypingError", "CompositionMismatch",
    "GeneratorNotInTheory", "RelationMismatch", "infer_type", "well_typed",
    "rename_arrow", "random_term", "top_iso", "top_iso_inverse", "subterm",
    "replace_at", "positions", "ast_size", "contains_top", "Hole", "TermHole",
]
