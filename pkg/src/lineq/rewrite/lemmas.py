"""Derived equations used as macro steps by the normal-form passes.

Each lemma is stated with metavariables and proved by a chain of terms in which
consecutive entries differ by one schema instance or one earlier lemma.  The chain
is checked once on a generic instance (fresh atoms for formula holes, an opaque
``t`` arrow for arrow holes); the resulting list of primitive steps is position
based and so replays on every instance of the lemma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from ..proofterm import (
    ArrowHole, ArrowTerm, Path, Step, Theory, Trans, TypingError, infer_type, subterm,
)
from ..syntax import Atom, Hole, Rel, Var
from ..text import parse_arrow, parse_formula, show_arrow
from .derivation import Rewriter, diff_path, one_step
from .equations import (
    Direction, NoMatchAtPath, RewriteError, apply_equation, holes, instantiate, match,
)

StepList = tuple[tuple[str, Path, Direction], ...]

# schema groups a structural lemma may use
_STRUCTURAL = (
    "cat1L", "cat1R", "cat2", "and1", "and2", "b nat", "delta nat", "sigma nat", "bb1",
    "bb2", "b5", "deltadelta1", "deltadelta2", "sigmasigma1", "sigmasigma2",
    "bdeltasigma", "c nat", "cc", "bc",
)


class LemmaProofError(RuntimeError):
    pass


@dataclass
class Lemma:
    name: str
    lhs_text: str
    rhs_text: str
    chain_text: Sequence[str] = ()
    typing: Sequence[tuple[str, str, str]] = ()
    symmetric: bool = False
    registry: dict = field(default=None, repr=False, compare=False)

    @cached_property
    def lhs(self) -> ArrowTerm:
        return parse_arrow(self.lhs_text)

    @cached_property
    def rhs(self) -> ArrowTerm:
        return parse_arrow(self.rhs_text)

    @cached_property
    def _typing(self) -> tuple:
        return tuple((n, parse_formula(s), parse_formula(t)) for n, s, t in self.typing)

    @property
    def proof_theory(self) -> Theory:
        return Theory.S_LEQ if self.symmetric else Theory.M_LEQ

    def generic_binding(self) -> dict:
        b: dict = {}
        for name, s, t in self._typing:
            v = [Var(f"{name}{i}") for i in range(3)]
            arrow = Trans(*v)
            ty = infer_type(arrow, self.proof_theory)
            b[(ArrowHole, name)] = arrow
            if not (match(s, ty.source, b) and match(t, ty.target, b)):
                raise LemmaProofError(f"{self.name}: typing placeholders clash")
        for key in sorted(holes(self.lhs) | holes(self.rhs), key=lambda k: k[1]):
            if key not in b and key[0] is Hole:
                b[key] = Atom(Rel.LEQ, Var(f"{key[1]}0"), Var(f"{key[1]}1"))
        return b

    @cached_property
    def steps(self) -> StepList:
        """Primitive steps from the generic left side to the generic right side."""
        b = self.generic_binding()
        theory = self.proof_theory
        chain = [self.lhs, *(parse_arrow(t) for t in self.chain_text), self.rhs]
        terms = [instantiate(p, b) for p in chain]
        out: list = []
        for i, (a, c) in enumerate(zip(terms, terms[1:])):
            try:
                infer_type(c, theory)
            except TypingError as e:
                raise LemmaProofError(f"{self.name}: chain entry {i + 1} is ill-typed: {e}")
            found = connect(a, c, theory, self.registry, before=self.name)
            if found is None:
                raise LemmaProofError(
                    f"{self.name}: no step from entry {i}\n  {show_arrow(a)}\nto\n  {show_arrow(c)}")
            out.extend(found)
        return tuple(out)

    def binding(self, term: ArrowTerm, direction: Direction, theory: Theory) -> dict | None:
        side = self.lhs if direction is Direction.L2R else self.rhs
        b: dict = {}
        if not match(side, term, b):
            return None
        for name, s, t in self._typing:
            key = (ArrowHole, name)
            if key in b:
                try:
                    ty = infer_type(b[key], theory)
                except TypingError:
                    return None
                if not (match(s, ty.source, b) and match(t, ty.target, b)):
                    return None
        return b

    def step_list(self, direction: Direction) -> StepList:
        if direction is Direction.L2R:
            return self.steps
        return tuple((n, p, d.flip()) for n, p, d in reversed(self.steps))

    def rewrite(self, term: ArrowTerm, direction: Direction, theory: Theory) -> ArrowTerm | None:
        if self.binding(term, direction, theory) is None:
            return None
        cur = term
        try:
            for n, p, d in self.step_list(direction):
                cur = apply_equation(cur, n, p, d, theory)
        except RewriteError:
            return None
        return cur

    def apply(self, rw: Rewriter, path: Sequence[Step], direction: Direction = Direction.L2R):
        """Apply at ``path`` inside ``rw``, recording the primitive steps."""
        sub = rw.at(path)
        if self.binding(sub, direction, rw.theory) is None:
            raise NoMatchAtPath(f"lemma {self.name} does not match {show_arrow(sub)}")
        rw.replay(self.step_list(direction), path)


def connect(a: ArrowTerm, b: ArrowTerm, theory: Theory, registry: dict | None,
            before: str | None = None) -> StepList | None:
    """One schema step, or one application of an earlier lemma, from ``a`` to ``b``."""
    step = one_step(a, b, theory, _STRUCTURAL)
    if step is not None:
        return (step,)
    if not registry:
        return None
    d = diff_path(a, b)
    earlier = []
    for name, lem in registry.items():
        if name == before:
            break
        if lem.symmetric and not theory.symmetric:
            continue
        earlier.append(lem)
    for k in range(len(d), -1, -1):
        pos = d[:k]
        sub, target = subterm(a, pos), subterm(b, pos)
        for lem in earlier:
            for direction in (Direction.L2R, Direction.R2L):
                if lem.rewrite(sub, direction, theory) == target:
                    return tuple((n, pos + p, dd) for n, p, dd in lem.step_list(direction))
    return None


LEMMAS: dict[str, Lemma] = {}


def _lemma(name: str, lhs: str, rhs: str, chain: Sequence[str] = (),
           typing: Sequence[tuple[str, str, str]] = (), symmetric: bool = False) -> None:
    LEMMAS[name] = Lemma(name, lhs, rhs, tuple(chain), tuple(typing), symmetric, LEMMAS)


def lemma(name: str) -> Lemma:
    return LEMMAS[name]


# -- naturality of the backward structural arrows ----------------------------

_lemma(
    "b< nat",
    "(?f /\\ (?g /\\ ?h)) o b<{?A; ?B; ?C}",
    "b<{?D; ?E; ?F} o ((?f /\\ ?g) /\\ ?h)",
    [
        "id{?D /\\ (?E /\\ ?F)} o (?f /\\ (?g /\\ ?h)) o b<{?A; ?B; ?C}",
        "(b<{?D; ?E; ?F} o b>{?D; ?E; ?F}) o (?f /\\ (?g /\\ ?h)) o b<{?A; ?B; ?C}",
        "b<{?D; ?E; ?F} o b>{?D; ?E; ?F} o (?f /\\ (?g /\\ ?h)) o b<{?A; ?B; ?C}",
        "b<{?D; ?E; ?F} o (b>{?D; ?E; ?F} o (?f /\\ (?g /\\ ?h))) o b<{?A; ?B; ?C}",
        "b<{?D; ?E; ?F} o (((?f /\\ ?g) /\\ ?h) o b>{?A; ?B; ?C}) o b<{?A; ?B; ?C}",
        "b<{?D; ?E; ?F} o ((?f /\\ ?g) /\\ ?h) o b>{?A; ?B; ?C} o b<{?A; ?B; ?C}",
        "b<{?D; ?E; ?F} o ((?f /\\ ?g) /\\ ?h) o id{(?A /\\ ?B) /\\ ?C}",
    ],
    [("f", "?A", "?D"), ("g", "?B", "?E"), ("h", "?C", "?F")],
)

_lemma(
    "delta< nat",
    "(?f /\\ id{T}) o del<{?A}",
    "del<{?D} o ?f",
    [
        "id{?D /\\ T} o (?f /\\ id{T}) o del<{?A}",
        "(del<{?D} o del>{?D}) o (?f /\\ id{T}) o del<{?A}",
        "del<{?D} o del>{?D} o (?f /\\ id{T}) o del<{?A}",
        "del<{?D} o (del>{?D} o (?f /\\ id{T})) o del<{?A}",
        "del<{?D} o (?f o del>{?A}) o del<{?A}",
        "del<{?D} o ?f o del>{?A} o del<{?A}",
        "del<{?D} o ?f o id{?A}",
    ],
    [("f", "?A", "?D")],
)

_lemma(
    "sigma< nat",
    "(id{T} /\\ ?f) o sig<{?A}",
    "sig<{?D} o ?f",
    [
        "id{T /\\ ?D} o (id{T} /\\ ?f) o sig<{?A}",
        "(sig<{?D} o sig>{?D}) o (id{T} /\\ ?f) o sig<{?A}",
        "sig<{?D} o sig>{?D} o (id{T} /\\ ?f) o sig<{?A}",
        "sig<{?D} o (sig>{?D} o (id{T} /\\ ?f)) o sig<{?A}",
        "sig<{?D} o (?f o sig>{?A}) o sig<{?A}",
        "sig<{?D} o ?f o sig>{?A} o sig<{?A}",
        "sig<{?D} o ?f o id{?A}",
    ],
    [("f", "?A", "?D")],
)

# -- moving a unit creator through an associativity arrow --------------------

_lemma(
    "b< delta<",
    "b<{?A; T; ?Z} o (del<{?A} /\\ id{?Z})",
    "id{?A} /\\ sig<{?Z}",
    [
        "b<{?A; T; ?Z} o (del<{?A} /\\ id{?Z}) o id{?A /\\ ?Z}",
        "b<{?A; T; ?Z} o (del<{?A} /\\ id{?Z}) o (id{?A} /\\ id{?Z})",
        "b<{?A; T; ?Z} o (del<{?A} /\\ id{?Z}) o (id{?A} /\\ (sig>{?Z} o sig<{?Z}))",
        "b<{?A; T; ?Z} o (del<{?A} /\\ id{?Z}) o ((id{?A} o id{?A}) /\\ (sig>{?Z} o sig<{?Z}))",
        "b<{?A; T; ?Z} o (del<{?A} /\\ id{?Z}) o (id{?A} /\\ sig>{?Z}) o (id{?A} /\\ sig<{?Z})",
        "b<{?A; T; ?Z} o ((del<{?A} /\\ id{?Z}) o (id{?A} /\\ sig>{?Z})) o (id{?A} /\\ sig<{?Z})",
        "b<{?A; T; ?Z} o b>{?A; T; ?Z} o (id{?A} /\\ sig<{?Z})",
        "(b<{?A; T; ?Z} o b>{?A; T; ?Z}) o (id{?A} /\\ sig<{?Z})",
        "id{?A /\\ (T /\\ ?Z)} o (id{?A} /\\ sig<{?Z})",
    ],
)

_lemma(
    "b> sigma<",
    "b>{?X; T; ?A} o (id{?X} /\\ sig<{?A})",
    "del<{?X} /\\ id{?A}",
    [
        "((del<{?X} /\\ id{?A}) o (id{?X} /\\ sig>{?A})) o (id{?X} /\\ sig<{?A})",
        "(del<{?X} /\\ id{?A}) o (id{?X} /\\ sig>{?A}) o (id{?X} /\\ sig<{?A})",
        "(del<{?X} /\\ id{?A}) o ((id{?X} o id{?X}) /\\ (sig>{?A} o sig<{?A}))",
        "(del<{?X} /\\ id{?A}) o (id{?X} /\\ (sig>{?A} o sig<{?A}))",
        "(del<{?X} /\\ id{?A}) o (id{?X} /\\ id{?A})",
        "(del<{?X} /\\ id{?A}) o id{?X /\\ ?A}",
    ],
)


def _swap(chain: Sequence[str], old: str, new: str) -> list[str]:
    return [s.replace(old, new) for s in chain]


# -- unit and associativity --------------------------------------------------

_lemma(
    "triangle'",
    r"(del>{?A} /\ id{?C}) o b>{?A; T; ?C}",
    r"id{?A} /\ sig>{?C}",
    [
        r"(del>{?A} /\ id{?C}) o (del<{?A} /\ id{?C}) o (id{?A} /\ sig>{?C})",
        r"((del>{?A} /\ id{?C}) o (del<{?A} /\ id{?C})) o (id{?A} /\ sig>{?C})",
        r"((del>{?A} o del<{?A}) /\ (id{?C} o id{?C})) o (id{?A} /\ sig>{?C})",
        r"(id{?A} /\ (id{?C} o id{?C})) o (id{?A} /\ sig>{?C})",
        r"(id{?A} /\ id{?C}) o (id{?A} /\ sig>{?C})",
        r"id{?A /\ ?C} o (id{?A} /\ sig>{?C})",
    ],
)

_B1, _B1i = r"b>{?X; ?A /\ T; ?C}", r"b<{?X; ?A /\ T; ?C}"
_B2, _B2i = r"(id{?X} /\ b>{?A; T; ?C})", r"(id{?X} /\ b<{?A; T; ?C})"

_lemma(
    "rho pentagon",
    rf"((del>{{?X /\ ?A}} o b>{{?X; ?A; T}}) /\ id{{?C}}) o {_B1} o {_B2}",
    rf"((id{{?X}} /\ del>{{?A}}) /\ id{{?C}}) o {_B1} o {_B2}",
    [
        rf"((del>{{?X /\ ?A}} o b>{{?X; ?A; T}}) /\ (id{{?C}} o id{{?C}})) o {_B1} o {_B2}",
        rf"((del>{{?X /\ ?A}} /\ id{{?C}}) o (b>{{?X; ?A; T}} /\ id{{?C}})) o {_B1} o {_B2}",
        rf"(del>{{?X /\ ?A}} /\ id{{?C}}) o (b>{{?X; ?A; T}} /\ id{{?C}}) o {_B1} o {_B2}",
        r"(del>{?X /\ ?A} /\ id{?C}) o b>{?X /\ ?A; T; ?C} o b>{?X; ?A; T /\ ?C}",
        r"((del>{?X /\ ?A} /\ id{?C}) o b>{?X /\ ?A; T; ?C}) o b>{?X; ?A; T /\ ?C}",
        r"(id{?X /\ ?A} /\ sig>{?C}) o b>{?X; ?A; T /\ ?C}",
        r"((id{?X} /\ id{?A}) /\ sig>{?C}) o b>{?X; ?A; T /\ ?C}",
        r"b>{?X; ?A; ?C} o (id{?X} /\ (id{?A} /\ sig>{?C}))",
        r"b>{?X; ?A; ?C} o (id{?X} /\ ((del>{?A} /\ id{?C}) o b>{?A; T; ?C}))",
        r"b>{?X; ?A; ?C} o ((id{?X} o id{?X}) /\ ((del>{?A} /\ id{?C}) o b>{?A; T; ?C}))",
        rf"b>{{?X; ?A; ?C}} o (id{{?X}} /\ (del>{{?A}} /\ id{{?C}})) o {_B2}",
        rf"(b>{{?X; ?A; ?C}} o (id{{?X}} /\ (del>{{?A}} /\ id{{?C}}))) o {_B2}",
        rf"(((id{{?X}} /\ del>{{?A}}) /\ id{{?C}}) o {_B1}) o {_B2}",
    ],
)

_K = r"((del>{?X /\ ?A} o b>{?X; ?A; T}) /\ id{?C})"
_H = r"((id{?X} /\ del>{?A}) /\ id{?C})"
_iso_in = [
    rf"{_K} o id{{(?X /\ (?A /\ T)) /\ ?C}}",
    rf"{_K} o {_B1} o {_B1i}",
    rf"{_K} o {_B1} o id{{?X /\ ((?A /\ T) /\ ?C)}} o {_B1i}",
    rf"{_K} o {_B1} o (id{{?X}} /\ id{{(?A /\ T) /\ ?C}}) o {_B1i}",
    rf"{_K} o {_B1} o (id{{?X}} /\ (b>{{?A; T; ?C}} o b<{{?A; T; ?C}})) o {_B1i}",
    rf"{_K} o {_B1} o ((id{{?X}} o id{{?X}}) /\ (b>{{?A; T; ?C}} o b<{{?A; T; ?C}})) o {_B1i}",
    rf"{_K} o {_B1} o ({_B2} o {_B2i}) o {_B1i}",
    rf"{_K} o {_B1} o {_B2} o {_B2i} o {_B1i}",
    rf"{_K} o ({_B1} o {_B2}) o {_B2i} o {_B1i}",
    rf"({_K} o {_B1} o {_B2}) o {_B2i} o {_B1i}",
]
_lemma(
    "rho tensor",
    _K[1:-1],
    _H[1:-1],
    _iso_in + _swap(_iso_in[::-1], _K, _H),
)

_S = r"?X /\ (?A /\ T)"
_lemma(
    "rho assoc",
    r"del>{?X /\ ?A} o b>{?X; ?A; T}",
    r"id{?X} /\ del>{?A}",
    [
        rf"(del>{{?X /\ ?A}} o b>{{?X; ?A; T}}) o id{{{_S}}}",
        rf"(del>{{?X /\ ?A}} o b>{{?X; ?A; T}}) o del>{{{_S}}} o del<{{{_S}}}",
        rf"((del>{{?X /\ ?A}} o b>{{?X; ?A; T}}) o del>{{{_S}}}) o del<{{{_S}}}",
        rf"(del>{{?X /\ ?A}} o ((del>{{?X /\ ?A}} o b>{{?X; ?A; T}}) /\ id{{T}})) o del<{{{_S}}}",
        rf"del>{{?X /\ ?A}} o ((del>{{?X /\ ?A}} o b>{{?X; ?A; T}}) /\ id{{T}}) o del<{{{_S}}}",
        rf"del>{{?X /\ ?A}} o ((id{{?X}} /\ del>{{?A}}) /\ id{{T}}) o del<{{{_S}}}",
        rf"(del>{{?X /\ ?A}} o ((id{{?X}} /\ del>{{?A}}) /\ id{{T}})) o del<{{{_S}}}",
        rf"((id{{?X}} /\ del>{{?A}}) o del>{{{_S}}}) o del<{{{_S}}}",
        rf"(id{{?X}} /\ del>{{?A}}) o del>{{{_S}}} o del<{{{_S}}}",
        rf"(id{{?X}} /\ del>{{?A}}) o id{{{_S}}}",
    ],
)

_lemma(
    "b> delta<",
    r"b>{?X; ?A; T} o (id{?X} /\ del<{?A})",
    r"del<{?X /\ ?A}",
    [
        r"id{(?X /\ ?A) /\ T} o b>{?X; ?A; T} o (id{?X} /\ del<{?A})",
        r"(del<{?X /\ ?A} o del>{?X /\ ?A}) o b>{?X; ?A; T} o (id{?X} /\ del<{?A})",
        r"del<{?X /\ ?A} o del>{?X /\ ?A} o b>{?X; ?A; T} o (id{?X} /\ del<{?A})",
        r"del<{?X /\ ?A} o (del>{?X /\ ?A} o b>{?X; ?A; T}) o (id{?X} /\ del<{?A})",
        r"del<{?X /\ ?A} o (id{?X} /\ del>{?A}) o (id{?X} /\ del<{?A})",
        r"del<{?X /\ ?A} o ((id{?X} o id{?X}) /\ (del>{?A} o del<{?A}))",
        r"del<{?X /\ ?A} o (id{?X} /\ (del>{?A} o del<{?A}))",
        r"del<{?X /\ ?A} o (id{?X} /\ id{?A})",
        r"del<{?X /\ ?A} o id{?X /\ ?A}",
    ],
)

_lemma(
    "b< delta< split",
    r"b<{?X; ?A; T} o del<{?X /\ ?A}",
    r"id{?X} /\ del<{?A}",
    [
        r"b<{?X; ?A; T} o b>{?X; ?A; T} o (id{?X} /\ del<{?A})",
        r"(b<{?X; ?A; T} o b>{?X; ?A; T}) o (id{?X} /\ del<{?A})",
        r"id{?X /\ (?A /\ T)} o (id{?X} /\ del<{?A})",
    ],
)

_P = r"b>{?C /\ T; ?Y; ?Z} o b>{?C; T; ?Y /\ ?Z}"
_Bi = r"b<{?C; ?Y; ?Z}"
_Bf = r"b>{?C; ?Y; ?Z}"
_lemma(
    "lambda pentagon",
    r"(del>{?C} /\ id{?Y /\ ?Z}) o b>{?C; T; ?Y /\ ?Z}",
    r"(id{?C} /\ (sig>{?Y} /\ id{?Z})) o (id{?C} /\ b>{T; ?Y; ?Z})",
    [
        r"id{?C /\ (?Y /\ ?Z)} o (del>{?C} /\ id{?Y /\ ?Z}) o b>{?C; T; ?Y /\ ?Z}",
        rf"({_Bi} o {_Bf}) o (del>{{?C}} /\ id{{?Y /\ ?Z}}) o b>{{?C; T; ?Y /\ ?Z}}",
        rf"{_Bi} o {_Bf} o (del>{{?C}} /\ id{{?Y /\ ?Z}}) o b>{{?C; T; ?Y /\ ?Z}}",
        rf"{_Bi} o ({_Bf} o (del>{{?C}} /\ id{{?Y /\ ?Z}})) o b>{{?C; T; ?Y /\ ?Z}}",
        rf"{_Bi} o ({_Bf} o (del>{{?C}} /\ (id{{?Y}} /\ id{{?Z}}))) o b>{{?C; T; ?Y /\ ?Z}}",
        rf"{_Bi} o (((del>{{?C}} /\ id{{?Y}}) /\ id{{?Z}}) o b>{{?C /\ T; ?Y; ?Z}}) o b>{{?C; T; ?Y /\ ?Z}}",
        rf"{_Bi} o ((del>{{?C}} /\ id{{?Y}}) /\ id{{?Z}}) o {_P}",
        rf"{_Bi} o ((del>{{?C}} /\ id{{?Y}}) /\ id{{?Z}}) o (b>{{?C; T; ?Y}} /\ id{{?Z}}) o b>{{?C; T /\ ?Y; ?Z}} o (id{{?C}} /\ b>{{T; ?Y; ?Z}})",
        rf"{_Bi} o (((del>{{?C}} /\ id{{?Y}}) /\ id{{?Z}}) o (b>{{?C; T; ?Y}} /\ id{{?Z}})) o b>{{?C; T /\ ?Y; ?Z}} o (id{{?C}} /\ b>{{T; ?Y; ?Z}})",
        rf"{_Bi} o (((del>{{?C}} /\ id{{?Y}}) o b>{{?C; T; ?Y}}) /\ (id{{?Z}} o id{{?Z}})) o b>{{?C; T /\ ?Y; ?Z}} o (id{{?C}} /\ b>{{T; ?Y; ?Z}})",
        rf"{_Bi} o (((del>{{?C}} /\ id{{?Y}}) o b>{{?C; T; ?Y}}) /\ id{{?Z}}) o b>{{?C; T /\ ?Y; ?Z}} o (id{{?C}} /\ b>{{T; ?Y; ?Z}})",
        rf"{_Bi} o ((id{{?C}} /\ sig>{{?Y}}) /\ id{{?Z}}) o b>{{?C; T /\ ?Y; ?Z}} o (id{{?C}} /\ b>{{T; ?Y; ?Z}})",
        rf"{_Bi} o (((id{{?C}} /\ sig>{{?Y}}) /\ id{{?Z}}) o b>{{?C; T /\ ?Y; ?Z}}) o (id{{?C}} /\ b>{{T; ?Y; ?Z}})",
        rf"{_Bi} o ({_Bf} o (id{{?C}} /\ (sig>{{?Y}} /\ id{{?Z}}))) o (id{{?C}} /\ b>{{T; ?Y; ?Z}})",
        rf"{_Bi} o {_Bf} o (id{{?C}} /\ (sig>{{?Y}} /\ id{{?Z}})) o (id{{?C}} /\ b>{{T; ?Y; ?Z}})",
        rf"({_Bi} o {_Bf}) o (id{{?C}} /\ (sig>{{?Y}} /\ id{{?Z}})) o (id{{?C}} /\ b>{{T; ?Y; ?Z}})",
        r"id{?C /\ (?Y /\ ?Z)} o (id{?C} /\ (sig>{?Y} /\ id{?Z})) o (id{?C} /\ b>{T; ?Y; ?Z})",
    ],
)

_lemma(
    "lambda tensor",
    r"id{?C} /\ sig>{?Y /\ ?Z}",
    r"id{?C} /\ ((sig>{?Y} /\ id{?Z}) o b>{T; ?Y; ?Z})",
    [
        r"(del>{?C} /\ id{?Y /\ ?Z}) o b>{?C; T; ?Y /\ ?Z}",
        r"(id{?C} /\ (sig>{?Y} /\ id{?Z})) o (id{?C} /\ b>{T; ?Y; ?Z})",
        r"(id{?C} o id{?C}) /\ ((sig>{?Y} /\ id{?Z}) o b>{T; ?Y; ?Z})",
    ],
)

_U = r"T /\ (?Y /\ ?Z)"
_lemma(
    "lambda assoc",
    r"sig>{?Y /\ ?Z}",
    r"(sig>{?Y} /\ id{?Z}) o b>{T; ?Y; ?Z}",
    [
        rf"sig>{{?Y /\ ?Z}} o id{{{_U}}}",
        rf"sig>{{?Y /\ ?Z}} o sig>{{{_U}}} o sig<{{{_U}}}",
        rf"(sig>{{?Y /\ ?Z}} o sig>{{{_U}}}) o sig<{{{_U}}}",
        rf"(sig>{{?Y /\ ?Z}} o (id{{T}} /\ sig>{{?Y /\ ?Z}})) o sig<{{{_U}}}",
        rf"(sig>{{?Y /\ ?Z}} o (id{{T}} /\ ((sig>{{?Y}} /\ id{{?Z}}) o b>{{T; ?Y; ?Z}}))) o sig<{{{_U}}}",
        rf"(((sig>{{?Y}} /\ id{{?Z}}) o b>{{T; ?Y; ?Z}}) o sig>{{{_U}}}) o sig<{{{_U}}}",
        rf"((sig>{{?Y}} /\ id{{?Z}}) o b>{{T; ?Y; ?Z}}) o sig>{{{_U}}} o sig<{{{_U}}}",
        rf"((sig>{{?Y}} /\ id{{?Z}}) o b>{{T; ?Y; ?Z}}) o id{{{_U}}}",
    ],
)

_lemma(
    "b> sigma< split",
    r"b>{T; ?Y; ?Z} o sig<{?Y /\ ?Z}",
    r"sig<{?Y} /\ id{?Z}",
    [
        r"id{(T /\ ?Y) /\ ?Z} o b>{T; ?Y; ?Z} o sig<{?Y /\ ?Z}",
        r"(id{T /\ ?Y} /\ id{?Z}) o b>{T; ?Y; ?Z} o sig<{?Y /\ ?Z}",
        r"((sig<{?Y} o sig>{?Y}) /\ id{?Z}) o b>{T; ?Y; ?Z} o sig<{?Y /\ ?Z}",
        r"((sig<{?Y} o sig>{?Y}) /\ (id{?Z} o id{?Z})) o b>{T; ?Y; ?Z} o sig<{?Y /\ ?Z}",
        r"((sig<{?Y} /\ id{?Z}) o (sig>{?Y} /\ id{?Z})) o b>{T; ?Y; ?Z} o sig<{?Y /\ ?Z}",
        r"(sig<{?Y} /\ id{?Z}) o (sig>{?Y} /\ id{?Z}) o b>{T; ?Y; ?Z} o sig<{?Y /\ ?Z}",
        r"(sig<{?Y} /\ id{?Z}) o ((sig>{?Y} /\ id{?Z}) o b>{T; ?Y; ?Z}) o sig<{?Y /\ ?Z}",
        r"(sig<{?Y} /\ id{?Z}) o sig>{?Y /\ ?Z} o sig<{?Y /\ ?Z}",
        r"(sig<{?Y} /\ id{?Z}) o id{?Y /\ ?Z}",
    ],
)

_lemma(
    "b< sigma<",
    r"b<{T; ?A; ?Z} o (sig<{?A} /\ id{?Z})",
    r"sig<{?A /\ ?Z}",
    [
        r"b<{T; ?A; ?Z} o b>{T; ?A; ?Z} o sig<{?A /\ ?Z}",
        r"(b<{T; ?A; ?Z} o b>{T; ?A; ?Z}) o sig<{?A /\ ?Z}",
        r"id{T /\ (?A /\ ?Z)} o sig<{?A /\ ?Z}",
    ],
)

_lemma(
    "lambda unit",
    r"sig>{T /\ ?A}",
    r"id{T} /\ sig>{?A}",
    [
        r"id{T /\ ?A} o sig>{T /\ ?A}",
        r"(sig<{?A} o sig>{?A}) o sig>{T /\ ?A}",
        r"sig<{?A} o sig>{?A} o sig>{T /\ ?A}",
        r"sig<{?A} o sig>{?A} o (id{T} /\ sig>{?A})",
        r"(sig<{?A} o sig>{?A}) o (id{T} /\ sig>{?A})",
        r"id{T /\ ?A} o (id{T} /\ sig>{?A})",
    ],
)

_lemma(
    "unit tensor",
    r"(sig>{T} o del<{T}) /\ id{T}",
    r"id{T /\ T}",
    [
        r"(sig>{T} o del<{T}) /\ (id{T} o id{T})",
        r"(sig>{T} /\ id{T}) o (del<{T} /\ id{T})",
        r"(sig>{T} /\ id{T}) o (del<{T} /\ id{T}) o id{T /\ T}",
        r"(sig>{T} /\ id{T}) o (del<{T} /\ id{T}) o (id{T} /\ id{T})",
        r"(sig>{T} /\ id{T}) o (del<{T} /\ id{T}) o (id{T} /\ (sig>{T} o sig<{T}))",
        r"(sig>{T} /\ id{T}) o (del<{T} /\ id{T}) o ((id{T} o id{T}) /\ (sig>{T} o sig<{T}))",
        r"(sig>{T} /\ id{T}) o (del<{T} /\ id{T}) o (id{T} /\ sig>{T}) o (id{T} /\ sig<{T})",
        r"(sig>{T} /\ id{T}) o ((del<{T} /\ id{T}) o (id{T} /\ sig>{T})) o (id{T} /\ sig<{T})",
        r"(sig>{T} /\ id{T}) o b>{T; T; T} o (id{T} /\ sig<{T})",
        r"((sig>{T} /\ id{T}) o b>{T; T; T}) o (id{T} /\ sig<{T})",
        r"sig>{T /\ T} o (id{T} /\ sig<{T})",
        r"(id{T} /\ sig>{T}) o (id{T} /\ sig<{T})",
        r"(id{T} o id{T}) /\ (sig>{T} o sig<{T})",
        r"id{T} /\ (sig>{T} o sig<{T})",
        r"id{T} /\ id{T}",
    ],
)

_lemma(
    "sigma> delta<",
    r"sig>{T} o del<{T}",
    r"id{T}",
    [
        r"(sig>{T} o del<{T}) o id{T}",
        r"(sig>{T} o del<{T}) o del>{T} o del<{T}",
        r"((sig>{T} o del<{T}) o del>{T}) o del<{T}",
        r"(del>{T} o ((sig>{T} o del<{T}) /\ id{T})) o del<{T}",
        r"del>{T} o ((sig>{T} o del<{T}) /\ id{T}) o del<{T}",
        r"del>{T} o id{T /\ T} o del<{T}",
        r"del>{T} o del<{T}",
    ],
)

_lemma(
    "delta> sigma<",
    r"del>{T} o sig<{T}",
    r"id{T}",
    [
        r"(del>{T} o sig<{T}) o id{T}",
        r"(del>{T} o sig<{T}) o sig>{T} o del<{T}",
        r"del>{T} o sig<{T} o sig>{T} o del<{T}",
        r"del>{T} o (sig<{T} o sig>{T}) o del<{T}",
        r"del>{T} o id{T /\ T} o del<{T}",
        r"del>{T} o del<{T}",
    ],
)

# -- symmetry and units ------------------------------------------------------

_lemma(
    "hexagon unit",
    r"c{?A; ?C} o (del>{?A} /\ id{?C}) o b>{?A; T; ?C}",
    r"c{?A; ?C} o ((sig>{?A} o c{?A; T}) /\ id{?C}) o b>{?A; T; ?C}",
    [
        r"c{?A; ?C} o (id{?A} /\ sig>{?C})",
        r"(sig>{?C} /\ id{?A}) o c{?A; T /\ ?C}",
        r"(sig>{?C} /\ id{?A}) o b>{T; ?C; ?A} o (id{T} /\ c{?A; ?C}) o b<{T; ?A; ?C} o (c{?A; T} /\ id{?C}) o b>{?A; T; ?C}",
        r"((sig>{?C} /\ id{?A}) o b>{T; ?C; ?A}) o (id{T} /\ c{?A; ?C}) o b<{T; ?A; ?C} o (c{?A; T} /\ id{?C}) o b>{?A; T; ?C}",
        r"sig>{?C /\ ?A} o (id{T} /\ c{?A; ?C}) o b<{T; ?A; ?C} o (c{?A; T} /\ id{?C}) o b>{?A; T; ?C}",
        r"(sig>{?C /\ ?A} o (id{T} /\ c{?A; ?C})) o b<{T; ?A; ?C} o (c{?A; T} /\ id{?C}) o b>{?A; T; ?C}",
        r"(c{?A; ?C} o sig>{?A /\ ?C}) o b<{T; ?A; ?C} o (c{?A; T} /\ id{?C}) o b>{?A; T; ?C}",
        r"c{?A; ?C} o sig>{?A /\ ?C} o b<{T; ?A; ?C} o (c{?A; T} /\ id{?C}) o b>{?A; T; ?C}",
        r"c{?A; ?C} o ((sig>{?A} /\ id{?C}) o b>{T; ?A; ?C}) o b<{T; ?A; ?C} o (c{?A; T} /\ id{?C}) o b>{?A; T; ?C}",
        r"c{?A; ?C} o (sig>{?A} /\ id{?C}) o b>{T; ?A; ?C} o b<{T; ?A; ?C} o (c{?A; T} /\ id{?C}) o b>{?A; T; ?C}",
        r"c{?A; ?C} o (sig>{?A} /\ id{?C}) o (b>{T; ?A; ?C} o b<{T; ?A; ?C}) o (c{?A; T} /\ id{?C}) o b>{?A; T; ?C}",
        r"c{?A; ?C} o (sig>{?A} /\ id{?C}) o id{(T /\ ?A) /\ ?C} o (c{?A; T} /\ id{?C}) o b>{?A; T; ?C}",
        r"c{?A; ?C} o (sig>{?A} /\ id{?C}) o (c{?A; T} /\ id{?C}) o b>{?A; T; ?C}",
        r"c{?A; ?C} o ((sig>{?A} /\ id{?C}) o (c{?A; T} /\ id{?C})) o b>{?A; T; ?C}",
        r"c{?A; ?C} o ((sig>{?A} o c{?A; T}) /\ (id{?C} o id{?C})) o b>{?A; T; ?C}",
    ],
    symmetric=True,
)

_R = r"b<{?A; T; ?C}"
_cs = [
    r"(del>{?A} /\ id{?C}) o id{(?A /\ T) /\ ?C}",
    rf"(del>{{?A}} /\ id{{?C}}) o b>{{?A; T; ?C}} o {_R}",
    rf"((del>{{?A}} /\ id{{?C}}) o b>{{?A; T; ?C}}) o {_R}",
    rf"(id{{?A /\ ?C}} o (del>{{?A}} /\ id{{?C}}) o b>{{?A; T; ?C}}) o {_R}",
    rf"((c{{?C; ?A}} o c{{?A; ?C}}) o (del>{{?A}} /\ id{{?C}}) o b>{{?A; T; ?C}}) o {_R}",
    rf"(c{{?C; ?A}} o c{{?A; ?C}} o (del>{{?A}} /\ id{{?C}}) o b>{{?A; T; ?C}}) o {_R}",
]
_lemma(
    "symmetry unit tensor",
    r"del>{?A} /\ id{?C}",
    r"(sig>{?A} o c{?A; T}) /\ id{?C}",
    _cs + _swap(_cs[::-1], r"(del>{?A} /\ id{?C})", r"((sig>{?A} o c{?A; T}) /\ id{?C})"),
    symmetric=True,
)

_lemma(
    "symmetry unit",
    r"sig>{?A} o c{?A; T}",
    r"del>{?A}",
    [
        r"(sig>{?A} o c{?A; T}) o id{?A /\ T}",
        r"(sig>{?A} o c{?A; T}) o del>{?A /\ T} o del<{?A /\ T}",
        r"((sig>{?A} o c{?A; T}) o del>{?A /\ T}) o del<{?A /\ T}",
        r"(del>{?A} o ((sig>{?A} o c{?A; T}) /\ id{T})) o del<{?A /\ T}",
        r"(del>{?A} o (del>{?A} /\ id{T})) o del<{?A /\ T}",
        r"(del>{?A} o del>{?A /\ T}) o del<{?A /\ T}",
        r"del>{?A} o del>{?A /\ T} o del<{?A /\ T}",
        r"del>{?A} o id{?A /\ T}",
    ],
    symmetric=True,
)

_lemma(
    "c delta<",
    r"c{?A; T} o del<{?A}",
    r"sig<{?A}",
    [
        r"id{T /\ ?A} o c{?A; T} o del<{?A}",
        r"(sig<{?A} o sig>{?A}) o c{?A; T} o del<{?A}",
        r"sig<{?A} o sig>{?A} o c{?A; T} o del<{?A}",
        r"sig<{?A} o (sig>{?A} o c{?A; T}) o del<{?A}",
        r"sig<{?A} o del>{?A} o del<{?A}",
        r"sig<{?A} o id{?A}",
    ],
    symmetric=True,
)

_lemma(
    "c sigma<",
    r"c{T; ?A} o sig<{?A}",
    r"del<{?A}",
    [
        r"c{T; ?A} o c{?A; T} o del<{?A}",
        r"(c{T; ?A} o c{?A; T}) o del<{?A}",
        r"id{?A /\ T} o del<{?A}",
    ],
    symmetric=True,
)
