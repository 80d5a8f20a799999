import itertools
import random

import pytest

from lineq.analysis import (
    AdjunctionContext, NotInSubcategory, TypeMismatch, VariableYOccurs, adjunction_counit,
    adjunction_F, adjunction_G, adjunction_unit, check_adjunction, check_star,
    covered_conjunctions, decide_equal, diversify, maximal_sequences, middle_four,
    same_generality,
)
from lineq.diagram import SRC, TGT, eval_diagram
from lineq.proofterm import Compose, Id, Tensor, Theory, infer_type, random_term, rename_arrow
from lineq.rewrite import PreconditionNotRLess, enumerate_from, is_diversified_type, is_r_less
from lineq.syntax import TOP, Var, occurrences
from lineq.text import parse_arrow, parse_formula, show_formula

p, fm = parse_arrow, parse_formula
M, S, SE = Theory.M_LEQ, Theory.S_LEQ, Theory.S_EQUIV
v = {n: Var(n) for n in ["x", "y", "z", "u", "v1", "v2", "v3"]}


# -- decide_equal --------------------------------------------------------------

def test_decide_equal_examples():
    lhs = p("t[x;x;x] o (id{x<=x} /\\ t[x;x;x])")
    rhs = p("t[x;x;x] o (t[x;x;x] /\\ id{x<=x}) o b>{x<=x; x<=x; x<=x}")
    assert decide_equal(lhs, rhs, M)
    assert decide_equal(lhs, lhs, M)
    assert not decide_equal(p("id{x<=x /\\ x<=x}"), p("c{x<=x; x<=x}"), S)


def test_decide_equal_needs_equal_types():
    assert not decide_equal(p("id{x<=y}"), p("id{y<=x}"), M)


@pytest.mark.parametrize("theory", list(Theory))
def test_decide_equal_is_an_equivalence_and_congruence(theory):
    src = fm("x<=x /\\ x<=x") if theory.relation.value == "<=" else fm("x==x /\\ x==x")
    terms = enumerate_from(src, theory, 4)[:40]
    rng = random.Random(0)
    for _ in range(200):
        (f, tf), (g, tg), (h, th_) = rng.sample(terms, 3)
        assert decide_equal(f, f, theory)
        if tf == tg:
            assert decide_equal(f, g, theory) == decide_equal(g, f, theory)
        if tf == tg == th_ and decide_equal(f, g, theory) and decide_equal(g, h, theory):
            assert decide_equal(f, h, theory)
        if tf == tg and decide_equal(f, g, theory):
            k = terms[rng.randrange(len(terms))][0]
            assert decide_equal(Tensor(f, k), Tensor(g, k), theory)
            assert decide_equal(Compose(Id(tf), f), Compose(Id(tg), g), theory)


@pytest.mark.parametrize("theory", list(Theory))
def test_decide_equal_invariant_under_injective_renaming(theory):
    rho = {v["x"]: v["u"], v["y"]: v["x"], v["z"]: v["y"]}
    for seed in range(100):
        f = random_term(theory, 10, seed, ["x", "y", "z"])
        ty = infer_type(f, theory)
        g = Compose(Id(ty.target), f)
        assert decide_equal(rename_arrow(f, rho), rename_arrow(g, rho), theory)


# -- diversify and generality ----------------------------------------------------

def test_diversify_examples():
    g, rho = diversify(p("t[x;x;x]"), M)
    assert g == p("t[v1;v2;v3]")
    assert rho == {v["v1"]: v["x"], v["v2"]: v["x"], v["v3"]: v["x"]}
    assert str(infer_type(g, M)) == "v1<=v2 /\\ v2<=v3 |- v1<=v3"

    g, rho = diversify(p("id{x<=x}"), M)
    assert g == p("id{v1<=v2}") and set(rho.values()) == {v["x"]}


def test_diversify_already_diversified_is_a_bijection():
    g, rho = diversify(p("t[x;y;z]"), M)
    assert len(set(rho.values())) == len(rho) == 3
    assert rename_arrow(g, rho) == p("t[x;y;z]")


@pytest.mark.parametrize("theory", list(Theory))
def test_diversify_round_trip(theory):
    for seed in range(150):
        f = random_term(theory, 14, seed, ["x", "y"])
        g, rho = diversify(f, theory)
        assert rename_arrow(g, rho) == f
        assert is_diversified_type(g, theory)
        assert eval_diagram(g, theory).edges == eval_diagram(f, theory).edges


def test_same_generality_examples():
    assert same_generality(p("t[x;x;x]"), p("t[x;x;x] o id{x<=x /\\ x<=x}"), M)
    assert not same_generality(p("s[x;x]"), p("id{x==x}"), SE)
    assert same_generality(p("t[y;y;x] o (r[y] /\\ id{y<=x})"), p("sig>{y<=x}"), M)
    with pytest.raises(TypeMismatch):
        same_generality(p("id{x<=y}"), p("id{y<=x}"), M)


def _canonical_type(f, theory):
    # rename variables of the diversified type by first occurrence
    g, _ = diversify(f, theory)
    ty = infer_type(g, theory)
    order = {}
    for x in occurrences(ty.source) + occurrences(ty.target):
        order.setdefault(x, Var(f"w{len(order)}"))
    from lineq.syntax import rename_formula
    return show_formula(rename_formula(ty.source, order)), show_formula(rename_formula(ty.target, order))


@pytest.mark.parametrize("theory", [M, S, SE])
def test_same_generality_matches_diversified_types(theory):
    src = fm("x<=x /\\ x<=x") if theory is not SE else fm("x==x /\\ x==x")
    by_target = {}
    for f, tgt in enumerate_from(src, theory, 5):
        by_target.setdefault(tgt, []).append(f)
    pairs = [pr for fs in by_target.values() for pr in itertools.combinations(fs, 2)]
    random.Random(1).shuffle(pairs)
    pairs = pairs[:1000 // 3 + 1]
    assert pairs
    for f, g in pairs:
        want = _canonical_type(f, theory) == _canonical_type(g, theory)
        assert same_generality(f, g, theory) == want


# -- maximal sequences, (*) and covered conjunctions --------------------------

TB_RHS = "t[x;z;u] o (t[x;y;z] /\\ id{z<=u}) o b>{x<=y; y<=z; z<=u}"


def test_maximal_sequences_examples():
    assert maximal_sequences(p("t[x;y;z]"), M) == [[(SRC, 0), (SRC, 1), (SRC, 2), (SRC, 3)]]
    assert maximal_sequences(p("id{x<=y}"), M) == [[(SRC, 0), (SRC, 1)]]
    (seq,) = maximal_sequences(p(TB_RHS), M)
    assert len(seq) == 6


def test_maximal_sequences_reject_r():
    with pytest.raises(PreconditionNotRLess):
        maximal_sequences(p("r[x]"), M)


def test_check_star_examples():
    assert check_star(p("t[x;y;z]"), M)
    assert check_star(p("id{x<=y}"), M)
    d = eval_diagram(p("t[x;y;z]"), M)
    assert ((SRC, 0), (TGT, 0)) in d.edges and ((SRC, 3), (TGT, 1)) in d.edges


@pytest.mark.parametrize("theory", [M, S, Theory.M_EQUIV, SE])
def test_check_star_on_random_r_less_terms(theory):
    seen, seed = 0, 0
    while seen < 250:
        f = random_term(theory, 12, seed, ["x", "y", "z"])
        seed += 1
        if not is_r_less(f):
            continue
        seen += 1
        assert check_star(f, theory), f


def test_covered_conjunctions_examples():
    assert covered_conjunctions(p("t[x;y;z]"), M) == {()}
    assert covered_conjunctions(p("id{x<=y /\\ y<=z}"), M) == set()
    f = p("(t[z;x;u] o ((s[x;z] o t[x;y;z]) /\\ id{x==u})) /\\ id{u==v}")
    assert show_formula(infer_type(f, SE).source) == "((x==y /\\ y==z) /\\ x==u) /\\ u==v"
    assert covered_conjunctions(f, SE) == {("L",), ("L", "L")}


# -- adjunction -------------------------------------------------------------

CTX = AdjunctionContext("y", "z", M)


def test_F_and_G_examples():
    assert adjunction_F(CTX, fm("x<=x")) == fm("y<=z /\\ x<=x")
    assert adjunction_F(CTX, TOP) == fm("y<=z /\\ T")
    f = adjunction_F(CTX, p("r[x]"))
    assert f == p("id{y<=z} /\\ r[x]")
    assert str(infer_type(f, M)) == "y<=z /\\ T |- y<=z /\\ x<=x"
    assert adjunction_G(CTX, fm("y<=u /\\ x<=x")) == fm("z<=u /\\ x<=x")
    assert adjunction_G(CTX, p("id{y<=u /\\ T}")) == p("id{z<=u /\\ T}")
    assert adjunction_G(CTX, adjunction_F(CTX, fm("x<=x"))) == fm("z<=z /\\ x<=x")


def test_F_and_G_errors():
    with pytest.raises(VariableYOccurs):
        adjunction_F(CTX, fm("y<=x"))
    with pytest.raises(NotInSubcategory):
        adjunction_G(CTX, fm("x<=u /\\ x<=x"))
    with pytest.raises(NotInSubcategory):
        adjunction_G(CTX, fm("y<=u /\\ y<=x"))


def test_unit_and_counit():
    assert adjunction_unit(CTX, fm("x<=x")) == p("(r[z] /\\ id{x<=x}) o sig<{x<=x}")
    assert str(infer_type(adjunction_unit(CTX, TOP), M)) == "T |- z<=z /\\ T"
    assert adjunction_counit(CTX, fm("y<=u /\\ T")) == p("(t[y;z;u] /\\ id{T}) o b>{y<=z; z<=u; T}")


@pytest.mark.parametrize("theory", list(Theory))
def test_check_adjunction_small(theory):
    rel = "<=" if theory.relation.value == "<=" else "=="
    objs = [TOP, fm(f"x{rel}x"), fm(f"x{rel}u /\\ T"), fm(f"y{rel}u /\\ x{rel}x")]
    rep = check_adjunction(AdjunctionContext("y", "z", theory), objs, n_arrows=20)
    assert rep.ok, [c for c in rep.checks if not c["verdict"]]
    names = {c["name"] for c in rep.checks}
    assert {"triangle F", "triangle G", "derived r", "derived t"} <= names
    assert ("derived s" in names) == theory.has_s


def test_adjunction_report_json():
    rep = check_adjunction(CTX, [TOP], n_arrows=2)
    doc = rep.to_json()
    assert all({"name", "instance", "verdict"} <= set(c) for c in doc["checks"])


# -- middle four -------------------------------------------------------------

def test_middle_four():
    f = middle_four(fm("x<=y"), fm("z<=u"), fm("u<=x"), fm("y<=z"))
    assert str(infer_type(f, S)) == "(x<=y /\\ z<=u) /\\ (u<=x /\\ y<=z) |- (x<=y /\\ u<=x) /\\ (z<=u /\\ y<=z)"
    d = eval_diagram(f, S)
    perm = {a[1]: b[1] for a, b in d.edges}
    assert perm == {0: 0, 1: 1, 2: 4, 3: 5, 4: 2, 5: 3, 6: 6, 7: 7}

    g = middle_four(fm("x<=y"), TOP, TOP, fm("z<=u"))
    assert eval_diagram(g, S).edges == tuple(((SRC, i), (TGT, i)) for i in range(4))
