"""The adjunction between prefixing ``y<=z`` and substituting ``z`` for a leading ``y``.

Objects of the left category are formulae without ``y``; objects of the right
category are ``y<=u /\\ A`` with ``u`` and ``A`` free of ``y``.  In the
equivalence theories ``u==y /\\ A`` is admitted as well.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..proofterm import (
    TOP, ArrowTerm, BFwd, Compose, DeltaBwd, DeltaFwd, Id, Inv, Refl, SigmaBwd, Tensor,
    Theory, Trans, TypingError, arrow_fields, infer_type, random_term_from, rename_arrow,
)
from ..rewrite.shapes import _generators
from ..syntax import Atom, Conj, Formula, Term, Top, Var, rename_formula, term_vars
from ..text import show_arrow, show_formula
from .decide import decide_equal


class VariableYOccurs(ValueError):
    """The distinguished variable occurs where it is not allowed."""


class NotInSubcategory(ValueError):
    """A formula or arrow is not of the shape ``y<=u /\\ A``."""


def _var(v: Var | str) -> Var:
    return Var(v) if isinstance(v, str) else v


@dataclass(frozen=True)
class AdjunctionContext:
    y: Var
    z: Var
    theory: Theory = Theory.M_LEQ

    def __post_init__(self):
        object.__setattr__(self, "y", _var(self.y))
        object.__setattr__(self, "z", _var(self.z))
        if self.y == self.z:
            raise ValueError("y and z must be distinct variables")

    def atom(self, lhs: Term, rhs: Term) -> Atom:
        return Atom(self.theory.relation, lhs, rhs)


def _is_formula(x) -> bool:
    return isinstance(x, (Top, Atom, Conj))


def _formula_vars(a: Formula) -> set[Var]:
    if isinstance(a, Atom):
        return set(term_vars(a.lhs)) | set(term_vars(a.rhs))
    if isinstance(a, Conj):
        return _formula_vars(a.left) | _formula_vars(a.right)
    return set()


def _arrow_vars(f: ArrowTerm) -> set[Var]:
    out: set[Var] = set()
    for g in _generators(f):
        for x in arrow_fields(g):
            out |= _formula_vars(x) if _is_formula(x) else set(term_vars(x))
    return out


def _split(ctx: AdjunctionContext, b: Formula) -> tuple[Term, Formula, bool]:
    """``(u, A, flipped)`` for ``b = y<=u /\\ A`` (``flipped`` when ``b = u==y /\\ A``)."""
    if isinstance(b, Conj) and isinstance(b.left, Atom) and b.left.rel is ctx.theory.relation:
        at, rest = b.left, b.right
        if ctx.y not in _formula_vars(rest):
            if at.lhs == ctx.y and ctx.y not in term_vars(at.rhs):
                return at.rhs, rest, False
            if ctx.theory.has_s and at.rhs == ctx.y and ctx.y not in term_vars(at.lhs):
                return at.lhs, rest, True
    raise NotInSubcategory(f"{show_formula(b)} is not of the form y-atom /\\ A for y = {ctx.y}")


def in_left(ctx: AdjunctionContext, a: Formula) -> bool:
    return ctx.y not in _formula_vars(a)


def in_right(ctx: AdjunctionContext, b: Formula) -> bool:
    try:
        _split(ctx, b)
    except NotInSubcategory:
        return False
    return True


def adjunction_F(ctx: AdjunctionContext, x):
    """``A`` to ``y<=z /\\ A``; an arrow ``f`` to ``1 /\\ f``."""
    yz = ctx.atom(ctx.y, ctx.z)
    if _is_formula(x):
        if not in_left(ctx, x):
            raise VariableYOccurs(f"{ctx.y} occurs in {show_formula(x)}")
        return Conj(yz, x)
    if ctx.y in _arrow_vars(x):
        raise VariableYOccurs(f"{ctx.y} occurs in {show_arrow(x)}")
    infer_type(x, ctx.theory)
    return Tensor(Id(yz), x)


def adjunction_G(ctx: AdjunctionContext, x):
    """Substitute ``z`` for ``y`` in an object or arrow of the right category."""
    rho = {ctx.y: ctx.z}
    if _is_formula(x):
        _split(ctx, x)
        return rename_formula(x, rho)
    ty = infer_type(x, ctx.theory)
    _split(ctx, ty.source)
    _split(ctx, ty.target)
    return rename_arrow(x, rho)


def adjunction_unit(ctx: AdjunctionContext, a: Formula) -> ArrowTerm:
    """``(r_z /\\ 1_A) o sig<_A : A |- z<=z /\\ A``."""
    if not in_left(ctx, a):
        raise VariableYOccurs(f"{ctx.y} occurs in {show_formula(a)}")
    return Compose(Tensor(Refl(ctx.z), Id(a)), SigmaBwd(a))


def adjunction_counit(ctx: AdjunctionContext, b: Formula) -> ArrowTerm:
    """``(t_{y,z,u} /\\ 1_A) o b> : y<=z /\\ (z<=u /\\ A) |- y<=u /\\ A``.

    For ``b = u==y /\\ A`` the transitivity step is wrapped in the two needed
    symmetry generators.
    """
    u, a, flipped = _split(ctx, b)
    y, z = ctx.y, ctx.z
    if not flipped:
        return Compose(Tensor(Trans(y, z, u), Id(a)), BFwd(ctx.atom(y, z), ctx.atom(z, u), a))
    core = Compose(Inv(y, u), Compose(Trans(y, z, u), Tensor(Id(ctx.atom(y, z)), Inv(u, z))))
    return Compose(Tensor(core, Id(a)), BFwd(ctx.atom(y, z), ctx.atom(u, z), a))


# -- checks ------------------------------------------------------------------

def derived_refl(ctx: AdjunctionContext) -> ArrowTerm:
    return Compose(DeltaFwd(ctx.atom(ctx.z, ctx.z)), adjunction_unit(ctx, TOP))


def derived_trans(ctx: AdjunctionContext, v: Var, u: Var) -> ArrowTerm:
    """``t_{v,z,u}`` rebuilt from the counit at ``y<=u /\\ T`` (moved to ``v``)."""
    phi = adjunction_counit(ctx, Conj(ctx.atom(ctx.y, u), TOP))
    if v != ctx.y:
        phi = rename_arrow(phi, {ctx.y: v})
    return Compose(DeltaFwd(ctx.atom(v, u)),
                   Compose(phi, Tensor(Id(ctx.atom(v, ctx.z)), DeltaBwd(ctx.atom(ctx.z, u)))))


def derived_sym(ctx: AdjunctionContext) -> ArrowTerm:
    """``s_{y,z}`` from the unit at ``T`` and the counit at ``z==y /\\ T``."""
    y, z = ctx.y, ctx.z
    phi = adjunction_counit(ctx, Conj(ctx.atom(z, y), TOP))
    return Compose(DeltaFwd(ctx.atom(z, y)), Compose(phi, Compose(
        Tensor(Id(ctx.atom(y, z)), adjunction_unit(ctx, TOP)), DeltaBwd(ctx.atom(y, z)))))


@dataclass
class AdjunctionReport:
    checks: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c["verdict"] for c in self.checks)

    def add(self, name: str, instance: str, verdict: bool, error: str | None = None):
        item = {"name": name, "instance": instance, "verdict": bool(verdict)}
        if error:
            item["error"] = error
        self.checks.append(item)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": self.checks}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def _first_free(ctx: AdjunctionContext, avoid: set[Var]) -> Var:
    for name in ("u", "x", "w", "v", "p", "q"):
        v = Var(name)
        if v not in avoid and v not in (ctx.y, ctx.z):
            return v
    i = 0
    while Var(f"u{i}") in avoid:
        i += 1
    return Var(f"u{i}")


def _check(report: AdjunctionReport, name: str, instance: str, thunk) -> None:
    try:
        report.add(name, instance, thunk())
    except (TypingError, ValueError) as exc:
        report.add(name, instance, False, f"{type(exc).__name__}: {exc}")


def check_adjunction(ctx: AdjunctionContext, sample_objects: Iterable[Formula],
                     n_arrows: int = 100, seed: int = 0, arrow_size: int = 6,
                     variables: Sequence[Var | str] | None = None) -> AdjunctionReport:
    """Triangle identities, naturality and the derived generators, on samples.

    Samples free of ``y`` serve as objects ``A`` (and give ``y<=u /\\ A``);
    samples of the form ``y<=u /\\ A`` serve directly as objects ``B``.
    """
    th = ctx.theory
    rep = AdjunctionReport()
    lefts: list[Formula] = []
    rights: list[Formula] = []
    for obj in sample_objects:
        if in_right(ctx, obj):
            rights.append(obj)
        elif in_left(ctx, obj):
            lefts.append(obj)
            u = _first_free(ctx, _formula_vars(obj))
            rights.append(Conj(ctx.atom(ctx.y, u), obj))
        else:
            rep.add("sample", show_formula(obj), False, "NotInSubcategory")

    def triangle_left(a: Formula) -> bool:
        fa = adjunction_F(ctx, a)
        lhs = Compose(adjunction_counit(ctx, fa), adjunction_F(ctx, adjunction_unit(ctx, a)))
        return decide_equal(lhs, Id(fa), th)

    def triangle_right(b: Formula) -> bool:
        gb = adjunction_G(ctx, b)
        lhs = Compose(adjunction_G(ctx, adjunction_counit(ctx, b)), adjunction_unit(ctx, gb))
        return decide_equal(lhs, Id(gb), th)

    for a in lefts:
        _check(rep, "triangle F", show_formula(a), lambda a=a: triangle_left(a))
    for b in rights:
        _check(rep, "triangle G", show_formula(b), lambda b=b: triangle_right(b))

    vs = [_var(v) for v in (variables or ["x", "u"]) if _var(v) != ctx.y]
    rng = random.Random(seed)
    pool = lefts or [TOP]
    for k in range(n_arrows):
        a = pool[rng.randrange(len(pool))]
        h = random_term_from(th, a, arrow_size, rng.randrange(2 ** 32), vs)
        if k % 2 == 0:
            _check(rep, "unit naturality", show_arrow(h), lambda h=h: _unit_natural(ctx, h))
        else:
            u = _first_free(ctx, _arrow_vars(h))
            _check(rep, "counit naturality", show_arrow(h),
                   lambda h=h, u=u: _counit_natural(ctx, h, u))

    z = ctx.z
    _check(rep, "derived r", f"r[{z}]",
           lambda: decide_equal(derived_refl(ctx), Refl(z), th))
    u = _first_free(ctx, set())
    _check(rep, "derived t", f"t[{ctx.y};{z};{u}]",
           lambda: decide_equal(derived_trans(ctx, ctx.y, u), Trans(ctx.y, z, u), th))
    v = _first_free(ctx, {u})
    _check(rep, "derived t", f"t[{v};{z};{u}]",
           lambda: decide_equal(derived_trans(ctx, v, u), Trans(v, z, u), th))
    if th.has_s:
        _check(rep, "derived s", f"s[{ctx.y};{z}]",
               lambda: decide_equal(derived_sym(ctx), Inv(ctx.y, z), th))
    return rep


def _unit_natural(ctx: AdjunctionContext, h: ArrowTerm) -> bool:
    ty = infer_type(h, ctx.theory)
    lhs = Compose(adjunction_G(ctx, adjunction_F(ctx, h)), adjunction_unit(ctx, ty.source))
    rhs = Compose(adjunction_unit(ctx, ty.target), h)
    return decide_equal(lhs, rhs, ctx.theory)


def _counit_natural(ctx: AdjunctionContext, h: ArrowTerm, u: Term) -> bool:
    ty = infer_type(h, ctx.theory)
    g = Tensor(Id(ctx.atom(ctx.y, u)), h)
    b, b2 = Conj(ctx.atom(ctx.y, u), ty.source), Conj(ctx.atom(ctx.y, u), ty.target)
    lhs = Compose(g, adjunction_counit(ctx, b))
    rhs = Compose(adjunction_counit(ctx, b2), adjunction_F(ctx, adjunction_G(ctx, g)))
    return decide_equal(lhs, rhs, ctx.theory)
