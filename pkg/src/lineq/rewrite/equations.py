"""Equation schemas of the six calculi, pattern matching and one-step rewriting."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, fields, is_dataclass
from functools import lru_cache

from ..proofterm import (
    ArrowHole, ArrowTerm, ArrowType, BBwd, BFwd, Compose, Cong, DeltaBwd, DeltaFwd, Id,
    Inv, Path, Refl, SigmaBwd, SigmaFwd, Sym, Tensor, Theory, Trans, TypingError,
    infer_type, replace_at, subterm,
)
from ..syntax import TOP, Atom, Conj, Hole, Product, Rel, TermHole

_HOLES = (ArrowHole, Hole, TermHole)


class Direction(enum.Enum):
    L2R = "L2R"
    R2L = "R2L"

    def flip(self) -> "Direction":
        return Direction.R2L if self is Direction.L2R else Direction.L2R


class RewriteError(Exception):
    pass


class NoMatchAtPath(RewriteError):
    pass


class SchemaNotInTheory(RewriteError):
    pass


# -- matching ----------------------------------------------------------------

def match(pattern, value, binding: dict) -> bool:
    """Extend ``binding`` so that ``pattern`` instantiates to ``value``."""
    if isinstance(pattern, _HOLES):
        key = (type(pattern), pattern.name)
        if key in binding:
            return binding[key] == value
        binding[key] = value
        return True
    if type(pattern) is not type(value):
        return False
    if not is_dataclass(pattern):
        return pattern == value
    for f in fields(pattern):
        if not match(getattr(pattern, f.name), getattr(value, f.name), binding):
            return False
    return True


def instantiate(pattern, binding: dict):
    if isinstance(pattern, _HOLES):
        return binding[(type(pattern), pattern.name)]
    if not is_dataclass(pattern) or isinstance(pattern, enum.Enum):
        return pattern
    return type(pattern)(*(instantiate(getattr(pattern, f.name), binding) for f in fields(pattern)))


def holes(pattern) -> set:
    if isinstance(pattern, _HOLES):
        return {(type(pattern), pattern.name)}
    if not is_dataclass(pattern):
        return set()
    out = set()
    for f in fields(pattern):
        out |= holes(getattr(pattern, f.name))
    return out


# -- schemas -----------------------------------------------------------------

@dataclass(frozen=True)
class EquationSchema:
    name: str
    group: str
    lhs: ArrowTerm
    rhs: ArrowTerm
    # arrow hole name -> (source pattern, target pattern)
    typing: tuple = field(default=())

    def sides(self, direction: Direction) -> tuple[ArrowTerm, ArrowTerm]:
        return (self.lhs, self.rhs) if direction is Direction.L2R else (self.rhs, self.lhs)

    def rewrite(self, term: ArrowTerm, direction: Direction, theory: Theory,
                ty: ArrowType | None = None) -> ArrowTerm | None:
        """Replace an instance of one side by the other, or ``None`` on mismatch."""
        src, dst = self.sides(direction)
        b: dict = {}
        if not match(src, term, b):
            return None
        for name, (s, t) in self.typing:
            key = (ArrowHole, name)
            if key not in b:
                continue
            try:
                fty = infer_type(b[key], theory)
            except TypingError:
                return None
            if not (match(s, fty.source, b) and match(t, fty.target, b)):
                return None
        if not holes(dst) <= b.keys():
            return None
        out = instantiate(dst, b)
        try:
            if ty is None:
                ty = infer_type(term, theory)
            if infer_type(out, theory) != ty:
                return None
        except TypingError:
            return None
        return out


A, B, C, D, E, F = (Hole(n) for n in "ABCDEF")
f, g, h = ArrowHole("f"), ArrowHole("g"), ArrowHole("h")
f1, f2, g1, g2 = (ArrowHole(n) for n in ("f1", "f2", "g1", "g2"))
x, y, z, u = (TermHole(n) for n in "xyzu")


def _c(*parts: ArrowTerm) -> ArrowTerm:
    """Right-associated composite ``parts[0] o parts[1] o ...``."""
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Compose(p, out)
    return out


def middle_four_term(a, b, c, d) -> ArrowTerm:
    """``(A/\\B)/\\(C/\\D) |- (A/\\C)/\\(B/\\D)`` built from b and c."""
    return _c(
        BFwd(a, c, Conj(b, d)),
        Tensor(Id(a), _c(BBwd(c, b, d), Tensor(Sym(b, c), Id(d)), BFwd(b, c, d))),
        BBwd(a, b, Conj(c, d)),
    )


def _base(rel: Rel) -> list[EquationSchema]:
    at = lambda p, q: Atom(rel, p, q)
    return [
        EquationSchema("cat1L", "categorial", Compose(Id(B), f), f, (("f", (A, B)),)),
        EquationSchema("cat1R", "categorial", Compose(f, Id(A)), f, (("f", (A, B)),)),
        EquationSchema("cat2", "categorial", Compose(Compose(h, g), f), Compose(h, Compose(g, f))),
        EquationSchema("and1", "bifunctoriality", Tensor(Id(A), Id(B)), Id(Conj(A, B))),
        EquationSchema("and2", "bifunctoriality",
                       Tensor(Compose(g1, f1), Compose(g2, f2)),
                       Compose(Tensor(g1, g2), Tensor(f1, f2))),
        EquationSchema("b nat", "naturality",
                       Compose(Tensor(Tensor(f, g), h), BFwd(A, B, C)),
                       Compose(BFwd(D, E, F), Tensor(f, Tensor(g, h))),
                       (("f", (A, D)), ("g", (B, E)), ("h", (C, F)))),
        EquationSchema("delta nat", "naturality",
                       Compose(f, DeltaFwd(A)), Compose(DeltaFwd(D), Tensor(f, Id(TOP))),
                       (("f", (A, D)),)),
        EquationSchema("sigma nat", "naturality",
                       Compose(f, SigmaFwd(A)), Compose(SigmaFwd(D), Tensor(Id(TOP), f)),
                       (("f", (A, D)),)),
        EquationSchema("bb1", "monoidal", Compose(BBwd(A, B, C), BFwd(A, B, C)),
                       Id(Conj(A, Conj(B, C)))),
        EquationSchema("bb2", "monoidal", Compose(BFwd(A, B, C), BBwd(A, B, C)),
                       Id(Conj(Conj(A, B), C))),
        EquationSchema("b5", "monoidal",
                       Compose(BFwd(Conj(A, B), C, D), BFwd(A, B, Conj(C, D))),
                       _c(Tensor(BFwd(A, B, C), Id(D)), BFwd(A, Conj(B, C), D),
                          Tensor(Id(A), BFwd(B, C, D)))),
        EquationSchema("deltadelta1", "monoidal", Compose(DeltaBwd(A), DeltaFwd(A)),
                       Id(Conj(A, TOP))),
        EquationSchema("deltadelta2", "monoidal", Compose(DeltaFwd(A), DeltaBwd(A)), Id(A)),
        EquationSchema("sigmasigma1", "monoidal", Compose(SigmaBwd(A), SigmaFwd(A)),
                       Id(Conj(TOP, A))),
        EquationSchema("sigmasigma2", "monoidal", Compose(SigmaFwd(A), SigmaBwd(A)), Id(A)),
        EquationSchema("bdeltasigma", "monoidal", BFwd(A, TOP, C),
                       Compose(Tensor(DeltaBwd(A), Id(C)), Tensor(Id(A), SigmaFwd(C)))),
        EquationSchema("rtdelta", "specific",
                       Compose(Trans(x, y, y), Tensor(Id(at(x, y)), Refl(y))),
                       DeltaFwd(at(x, y))),
        EquationSchema("rtsigma", "specific",
                       Compose(Trans(y, y, x), Tensor(Refl(y), Id(at(y, x)))),
                       SigmaFwd(at(y, x))),
        EquationSchema("tb", "specific",
                       Compose(Trans(x, y, u), Tensor(Id(at(x, y)), Trans(y, z, u))),
                       _c(Trans(x, z, u), Tensor(Trans(x, y, z), Id(at(z, u))),
                          BFwd(at(x, y), at(y, z), at(z, u)))),
    ]


def _symmetric(rel: Rel) -> list[EquationSchema]:
    return [
        EquationSchema("c nat", "naturality",
                       Compose(Tensor(g, f), Sym(A, B)), Compose(Sym(D, E), Tensor(f, g)),
                       (("f", (A, D)), ("g", (B, E)))),
        EquationSchema("cc", "symmetric", Compose(Sym(B, A), Sym(A, B)), Id(Conj(A, B))),
        EquationSchema("bc", "symmetric", Sym(A, Conj(B, C)),
                       _c(BFwd(B, C, A), Tensor(Id(B), Sym(A, C)), BBwd(B, A, C),
                          Tensor(Sym(A, B), Id(C)), BFwd(A, B, C))),
    ]


def _inverse(rel: Rel) -> list[EquationSchema]:
    at = lambda p, q: Atom(rel, p, q)
    return [
        EquationSchema("ss", "specific", Compose(Inv(y, x), Inv(x, y)), Id(at(x, y))),
        EquationSchema("rs", "specific", Compose(Inv(x, x), Refl(x)), Refl(x)),
    ]


def _ts(rel: Rel) -> EquationSchema:
    at = lambda p, q: Atom(rel, p, q)
    return EquationSchema(
        "ts", "specific", Compose(Inv(x, z), Trans(x, y, z)),
        _c(Trans(z, y, x), Tensor(Inv(y, z), Inv(x, y)), Sym(at(x, y), at(y, z))))


def _dotted(rel: Rel) -> list[EquationSchema]:
    at = lambda p, q: Atom(rel, p, q)
    t, s = TermHole("t"), TermHole("s")
    t1, t2, s1, s2, r1, r2 = (TermHole(n) for n in ("t1", "t2", "s1", "s2", "r1", "r2"))
    return [
        EquationSchema("ra", "specific",
                       _c(Cong(t, t, s, s), Tensor(Refl(t), Refl(s)), DeltaBwd(TOP)),
                       Refl(Product(t, s))),
        EquationSchema("ta", "specific",
                       Compose(Cong(t1, r1, t2, r2), Tensor(Trans(t1, s1, r1), Trans(t2, s2, r2))),
                       Compose(Trans(Product(t1, t2), Product(s1, s2), Product(r1, r2)),
                               Compose(Tensor(Cong(t1, s1, t2, s2), Cong(s1, r1, s2, r2)),
                                       middle_four_term(at(t1, s1), at(s1, r1),
                                                        at(t2, s2), at(s2, r2))))),
    ]


def _sa(rel: Rel) -> EquationSchema:
    t1, t2, s1, s2 = (TermHole(n) for n in ("t1", "t2", "s1", "s2"))
    return EquationSchema(
        "sa", "specific",
        Compose(Inv(Product(t1, t2), Product(s1, s2)), Cong(t1, s1, t2, s2)),
        Compose(Cong(s1, t1, s2, t2), Tensor(Inv(t1, s1), Inv(t2, s2))))


@lru_cache(maxsize=None)
def equation_table(theory: Theory) -> tuple[EquationSchema, ...]:
    rel = theory.relation
    table = _base(rel)
    if theory.symmetric:
        table += _symmetric(rel)
    if theory.has_s:
        table += _inverse(rel)
        if theory.symmetric:
            table.append(_ts(rel))
    if theory.dotted:
        table += _dotted(rel)
        if theory.has_s:
            table.append(_sa(rel))
    return tuple(table)


@lru_cache(maxsize=None)
def schema_index(theory: Theory) -> dict[str, EquationSchema]:
    return {s.name: s for s in equation_table(theory)}


def get_schema(name: str, theory: Theory) -> EquationSchema:
    try:
        return schema_index(theory)[name]
    except KeyError:
        raise SchemaNotInTheory(f"{name!r} is not an equation of {theory.value}") from None


def apply_equation(term: ArrowTerm, name: str, path: Path, direction: Direction,
                   theory: Theory) -> ArrowTerm:
    """One-step replacement of a schema instance at ``path``."""
    schema = get_schema(name, theory)
    try:
        sub = subterm(term, path)
    except KeyError as e:
        raise NoMatchAtPath(str(e)) from None
    out = schema.rewrite(sub, direction, theory)
    if out is None:
        raise NoMatchAtPath(f"{name} {direction.value} does not match at {[s.value for s in path]}")
    return replace_at(term, path, out)
