import pytest

from lineq.diagram import eval_diagram
from lineq.proofterm import (
    TOP, CompositionMismatch, Compose, GeneratorNotInTheory, Id, Inv, Refl, RelationMismatch,
    Sym, Theory, Trans, infer_type, random_term, rename_arrow, top_iso, top_iso_inverse,
)
from lineq.diagram import identity_diagram
from lineq.syntax import Conj, Var, equiv, leq, occurrences, rename_formula, top_purge
from lineq.text import parse_formula

x, y, z, w = (Var(n) for n in "xyzw")


def test_trans_type():
    ty = infer_type(Trans(x, y, z), Theory.M_LEQ)
    assert ty.source == Conj(leq(x, y), leq(y, z))
    assert ty.target == leq(x, z)


def test_id_top():
    for th in Theory:
        ty = infer_type(Id(TOP), th)
        assert ty.source == ty.target == TOP


def test_composition_mismatch():
    with pytest.raises(CompositionMismatch):
        infer_type(Compose(Trans(x, y, z), Refl(x)), Theory.M_LEQ)


def test_generator_outside_theory():
    with pytest.raises(GeneratorNotInTheory):
        infer_type(Inv(x, y), Theory.M_LEQ)
    with pytest.raises(GeneratorNotInTheory):
        infer_type(Sym(leq(x, y), leq(y, z)), Theory.M_LEQ)


def test_relation_mismatch():
    with pytest.raises(RelationMismatch):
        infer_type(Id(leq(x, y)), Theory.M_EQUIV)


def test_rename_arrow_examples():
    assert rename_arrow(Trans(x, y, z), {y: x}) == Trans(x, x, z)
    assert rename_arrow(Refl(x), {x: w}) == Refl(w)
    f = rename_arrow(Inv(x, y), {x: y})
    assert f == Inv(y, y)
    ty = infer_type(f, Theory.M_EQUIV)
    assert ty.source == ty.target == equiv(y, y)


@pytest.mark.parametrize("theory", list(Theory))
def test_type_commutes_with_renaming(theory):
    rho = {Var("x"): Var("y"), Var("z"): Var("x")}
    for seed in range(100):
        f = random_term(theory, 12, seed, ["x", "y", "z"])
        ty = infer_type(f, theory)
        ty2 = infer_type(rename_arrow(f, rho), theory)
        assert ty2.source == rename_formula(ty.source, rho)
        assert ty2.target == rename_formula(ty.target, rho)


def test_random_term_deterministic_and_well_typed():
    assert random_term(Theory.M_LEQ, 1, 7, ["x"]) == random_term(Theory.M_LEQ, 1, 7, ["x"])
    for seed in range(1000):
        f = random_term(Theory.S_EQUIV, 12, seed, ["x", "y"])
        infer_type(f, Theory.S_EQUIV)


@pytest.mark.parametrize("text", [
    "x<=y /\\ T", "x<=y", "(T /\\ x<=y) /\\ T", "T /\\ (T /\\ T)",
    "((x<=y /\\ T) /\\ (T /\\ z<=x)) /\\ (T /\\ T)",
])
def test_top_iso(text):
    a = parse_formula(text)
    phi, inv = top_iso(a, Theory.M_LEQ), top_iso_inverse(a, Theory.M_LEQ)
    assert infer_type(phi, Theory.M_LEQ).target == top_purge(a)
    assert infer_type(inv, Theory.M_LEQ).source == top_purge(a)
    assert eval_diagram(phi, Theory.M_LEQ) == identity_diagram(a)
    assert eval_diagram(Compose(inv, phi), Theory.M_LEQ) == identity_diagram(a)
    assert len(occurrences(top_purge(a))) == len(occurrences(a))
