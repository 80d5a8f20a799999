"""Object language: variables, terms, formulae and renamings."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Union


@dataclass(frozen=True, order=True, slots=True)
class Var:
    name: str

    def __post_init__(self):
        if not self.name:
            raise ValueError("variable name must be nonempty")

    def __str__(self):
        return self.name


@dataclass(frozen=True, slots=True)
class Product:
    left: "Term"
    right: "Term"

    def __str__(self):
        return f"({self.left} . {self.right})"


Term = Union[Var, Product]


class Rel(enum.Enum):
    LEQ = "<="
    EQUIV = "=="


@dataclass(frozen=True, slots=True)
class Top:
    def __str__(self):
        return "T"


TOP = Top()


@dataclass(frozen=True, slots=True)
class Atom:
    rel: Rel
    lhs: Term
    rhs: Term

    def __str__(self):
        return f"{_term_str(self.lhs)}{self.rel.value}{_term_str(self.rhs)}"


@dataclass(frozen=True, slots=True)
class Conj:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return f"({self.left} /\\ {self.right})"


Formula = Union[Top, Atom, Conj]

Renaming = Mapping[Var, Var]


def _term_str(t: Term) -> str:
    return str(t)


def term_vars(t: Term) -> list[Var]:
    if isinstance(t, Var):
        return [t]
    return term_vars(t.left) + term_vars(t.right)


def occurrences(a: Formula) -> list[Var]:
    """Every variable occurrence in ``a``, left to right."""
    if isinstance(a, Top):
        return []
    if isinstance(a, Atom):
        return term_vars(a.lhs) + term_vars(a.rhs)
    return occurrences(a.left) + occurrences(a.right)


def top_purge(a: Formula) -> Formula:
    """Delete every eliminable ``T`` conjunct; the result is ``T`` or has no ``T``."""
    if not isinstance(a, Conj):
        return a
    left, right = top_purge(a.left), top_purge(a.right)
    if isinstance(right, Top):
        return left
    if isinstance(left, Top):
        return right
    return Conj(left, right)


def contains_top(a: Formula) -> bool:
    if isinstance(a, Top):
        return True
    if isinstance(a, Conj):
        return contains_top(a.left) or contains_top(a.right)
    return False


def has_product(a: Formula) -> bool:
    if isinstance(a, Atom):
        return isinstance(a.lhs, Product) or isinstance(a.rhs, Product)
    if isinstance(a, Conj):
        return has_product(a.left) or has_product(a.right)
    return False


def rename_term(t: Term, rho: Renaming) -> Term:
    if isinstance(t, Product):
        return Product(rename_term(t.left, rho), rename_term(t.right, rho))
    return rho.get(t, t)


def rename_formula(a: Formula, rho: Renaming) -> Formula:
    if isinstance(a, Atom):
        return Atom(a.rel, rename_term(a.lhs, rho), rename_term(a.rhs, rho))
    if isinstance(a, Conj):
        return Conj(rename_formula(a.left, rho), rename_formula(a.right, rho))
    return a


def atoms(a: Formula) -> list[Atom]:
    if isinstance(a, Atom):
        return [a]
    if isinstance(a, Conj):
        return atoms(a.left) + atoms(a.right)
    return []


def conj_all(parts: list[Formula]) -> Formula:
    """Left-nested conjunction of ``parts`` (``T`` when empty)."""
    if not parts:
        return TOP
    out = parts[0]
    for p in parts[1:]:
        out = Conj(out, p)
    return out


def leq(x, y) -> Atom:
    return Atom(Rel.LEQ, _as_term(x), _as_term(y))


def equiv(x, y) -> Atom:
    return Atom(Rel.EQUIV, _as_term(x), _as_term(y))


def _as_term(t) -> Term:
    return Var(t) if isinstance(t, str) else t


@dataclass(frozen=True, slots=True)
class Hole:
    """Formula placeholder; used as a metavariable in equation patterns."""

    name: str

    def __str__(self):
        return f"?{self.name}"


@dataclass(frozen=True, slots=True)
class TermHole:
    """Term placeholder; used as a metavariable in equation patterns."""

    name: str

    def __str__(self):
        return f"?{self.name}"
