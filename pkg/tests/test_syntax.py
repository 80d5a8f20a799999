from lineq.syntax import (
    TOP, Atom, Conj, Product, Rel, Var, contains_top, leq, occurrences, rename_formula,
    top_purge,
)
from lineq.text import parse_formula

x, y, z, u = (Var(n) for n in "xyzu")


def test_occurrences_left_to_right():
    assert occurrences(parse_formula("x<=y /\\ z<=x")) == [x, y, z, x]
    assert occurrences(TOP) == []
    assert occurrences(Atom(Rel.LEQ, Product(x, y), z)) == [x, y, z]


def test_top_purge_examples():
    assert top_purge(Conj(leq("x", "y"), TOP)) == leq("x", "y")
    assert top_purge(TOP) == TOP
    assert top_purge(Conj(Conj(TOP, TOP), leq("x", "y"))) == leq("x", "y")


def test_top_purge_is_top_or_top_free():
    for text in ["T /\\ (T /\\ T)", "(x<=y /\\ T) /\\ (T /\\ z<=u)", "T /\\ x<=x"]:
        out = top_purge(parse_formula(text))
        assert out == TOP or not contains_top(out)
        assert occurrences(out) == occurrences(parse_formula(text))


def test_rename_formula_merges_variables():
    a = Atom(Rel.LEQ, Product(x, y), x)
    assert rename_formula(a, {x: u, y: u}) == Atom(Rel.LEQ, Product(u, u), u)


def test_vars_and_atoms_are_hashable_values():
    assert Var("x") == x
    assert len({leq("x", "y"), leq("x", "y"), leq("y", "x")}) == 2
