"""Concrete syntax: printing and recursive-descent parsing of formulas and arrow terms.

Grammar (whitespace insignificant)::

    term    := ident | "(" term "." term ")"
    atom    := term "<=" term | term "==" term
    formula := fprim ("/\\" fprim)*            -- left associative
    fprim   := "T" | atom | "(" formula ")"
    arrow   := tensor ("o" arrow)?            -- right associative
    tensor  := aprim ("/\\" aprim)*            -- left associative
    aprim   := "id{" F "}" | "b>{" F;F;F "}" | "b<{" F;F;F "}" | "del>{" F "}"
             | "del<{" F "}" | "sig>{" F "}" | "sig<{" F "}" | "c{" F;F "}"
             | "r[" t "]" | "t[" t;t;t "]" | "s[" t;t "]" | "a[" t;t;t;t "]"
             | "(" arrow ")"
"""

from __future__ import annotations

import re

from .proofterm import (
    ArrowHole, ArrowTerm, BBwd, BFwd, Compose, Cong, DeltaBwd, DeltaFwd, Id, Inv,
    Refl, SigmaBwd, SigmaFwd, Sym, Tensor, Trans,
)
from .syntax import Atom, Conj, Formula, Hole, Product, Rel, Term, TermHole, Top, Var, TOP

_IDENT = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        self.pos, self.expected = pos, expected
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        found = text[pos:pos + 12] or "end of input"
        super().__init__(
            f"line {self.line}, column {self.column}: expected {expected}, found {found!r}")


# -- printing ----------------------------------------------------------------

def show_term(t: Term) -> str:
    if isinstance(t, Product):
        return f"({show_term(t.left)} . {show_term(t.right)})"
    if isinstance(t, TermHole):
        return f"?{t.name}"
    return t.name


def show_formula(a: Formula) -> str:
    if isinstance(a, Top):
        return "T"
    if isinstance(a, Atom):
        return f"{show_term(a.lhs)}{a.rel.value}{show_term(a.rhs)}"
    if isinstance(a, Hole):
        return f"?{a.name}"
    return f"{_wrap_conj(a.left)} /\\ {_wrap_conj(a.right)}"


def _wrap_conj(a: Formula) -> str:
    s = show_formula(a)
    return f"({s})" if isinstance(a, Conj) else s


_FORMULA_GENS = {
    Id: "id", BFwd: "b>", BBwd: "b<", DeltaFwd: "del>", DeltaBwd: "del<",
    SigmaFwd: "sig>", SigmaBwd: "sig<", Sym: "c",
}
_TERM_GENS = {Refl: "r", Trans: "t", Inv: "s", Cong: "a"}


def show_arrow(f: ArrowTerm) -> str:
    """Canonical form: minimal parentheses, one space around ``o`` and ``/\\``."""
    if isinstance(f, Compose):
        left = show_arrow(f.g)
        if isinstance(f.g, Compose):
            left = f"({left})"
        return f"{left} o {show_arrow(f.f)}"
    if isinstance(f, Tensor):
        left = show_arrow(f.f)
        if isinstance(f.f, Compose):
            left = f"({left})"
        right = show_arrow(f.g)
        if isinstance(f.g, (Compose, Tensor)):
            right = f"({right})"
        return f"{left} /\\ {right}"
    if type(f) in _FORMULA_GENS:
        args = "; ".join(show_formula(getattr(f, n)) for n in f.__dataclass_fields__)
        return f"{_FORMULA_GENS[type(f)]}{{{args}}}"
    if type(f) in _TERM_GENS:
        args = ";".join(show_term(getattr(f, n)) for n in f.__dataclass_fields__)
        return f"{_TERM_GENS[type(f)]}[{args}]"
    if isinstance(f, ArrowHole):
        return f"?{f.name}"
    raise TypeError(f"cannot print {f!r}")


# -- parsing -----------------------------------------------------------------

_GEN_ARITY = {
    "id": (Id, 1), "b>": (BFwd, 3), "b<": (BBwd, 3), "del>": (DeltaFwd, 1),
    "del<": (DeltaBwd, 1), "sig>": (SigmaFwd, 1), "sig<": (SigmaBwd, 1), "c": (Sym, 2),
}
_TERM_ARITY = {"r": (Refl, 1), "t": (Trans, 3), "s": (Inv, 2), "a": (Cong, 4)}


class _Parser:
    def __init__(self, text: str):
        self.text, self.pos = text, 0

    def error(self, expected: str) -> ParseError:
        return ParseError(self.text, self.pos, expected)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.accept(s):
            raise self.error(repr(s))

    def ident(self) -> str:
        self.skip()
        m = _IDENT.match(self.text, self.pos)
        if not m:
            raise self.error("identifier")
        self.pos = m.end()
        return m.group()

    def end(self) -> None:
        self.skip()
        if self.pos != len(self.text):
            raise self.error("end of input")

    # terms and formulas

    def hole_name(self) -> str | None:
        return self.ident() if self.accept("?") else None

    def term(self) -> Term:
        name = self.hole_name()
        if name is not None:
            return TermHole(name)
        if self.accept("("):
            left = self.term()
            self.expect(".")
            right = self.term()
            self.expect(")")
            return Product(left, right)
        start = self.pos
        name = self.ident()
        if name == "T":
            self.pos = start
            raise self.error("variable (T is reserved)")
        return Var(name)

    def atom(self) -> Atom:
        lhs = self.term()
        if self.accept("<="):
            rel = Rel.LEQ
        elif self.accept("=="):
            rel = Rel.EQUIV
        else:
            raise self.error("'<=' or '=='")
        return Atom(rel, lhs, self.term())

    def fprim(self) -> Formula:
        self.skip()
        if self.peek("?"):
            # a bare formula placeholder, unless it opens an atom
            save = self.pos
            name = self.hole_name()
            if not (self.peek("<=") or self.peek("==")):
                return Hole(name)
            self.pos = save
        m = _IDENT.match(self.text, self.pos)
        if m and m.group() == "T":
            self.pos = m.end()
            return TOP
        if self.peek("("):
            # either a parenthesised formula or a product term opening an atom
            save = self.pos
            try:
                return self.atom()
            except ParseError:
                self.pos = save
            self.expect("(")
            a = self.formula()
            self.expect(")")
            return a
        return self.atom()

    def formula(self) -> Formula:
        a = self.fprim()
        while self.accept("/\\"):
            a = Conj(a, self.fprim())
        return a

    # arrow terms

    def args(self, parse, n: int, close: str) -> list:
        out = [parse()]
        while self.accept(";"):
            out.append(parse())
        self.expect(close)
        if len(out) != n:
            raise ParseError(self.text, self.pos - 1, f"{n} argument(s), got {len(out)}")
        return out

    def aprim(self) -> ArrowTerm:
        name = self.hole_name()
        if name is not None:
            return ArrowHole(name)
        if self.accept("("):
            f = self.arrow()
            self.expect(")")
            return f
        start = self.pos
        name = self.ident()
        if name in ("b", "del", "sig") and self.text[self.pos:self.pos + 1] in (">", "<"):
            name += self.text[self.pos]
            self.pos += 1
        if name in _GEN_ARITY:
            cls, n = _GEN_ARITY[name]
            self.expect("{")
            return cls(*self.args(self.formula, n, "}"))
        if name in _TERM_ARITY:
            cls, n = _TERM_ARITY[name]
            self.expect("[")
            return cls(*self.args(self.term, n, "]"))
        self.pos = start
        raise self.error("arrow term")

    def tensor(self) -> ArrowTerm:
        f = self.aprim()
        while self.accept("/\\"):
            f = Tensor(f, self.aprim())
        return f

    def arrow(self) -> ArrowTerm:
        f = self.tensor()
        self.skip()
        if re.match(r"o(?![a-zA-Z0-9_])", self.text[self.pos:]):
            self.pos += 1
            return Compose(f, self.arrow())
        return f


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    a = p.formula()
    p.end()
    return a


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.end()
    return t


def parse_arrow(text: str) -> ArrowTerm:
    p = _Parser(text)
    f = p.arrow()
    p.end()
    return f
