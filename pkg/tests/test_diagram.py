import random

import pytest

from lineq.diagram import (
    SRC, TGT, Diagram, InterfaceMismatch, compose, eval_diagram, eval_traced, identity_diagram,
    tensor, to_ascii, to_dot,
)
from lineq.proofterm import (
    Compose, Id, Refl, Tensor, Theory, infer_type, random_term, random_term_from,
)
from lineq.syntax import Var
from lineq.text import parse_arrow, parse_formula

from oracle import as_oracle, oracle_compose, oracle_diagram, random_matching

X = Var("x")


def ev(text, theory=Theory.M_LEQ):
    return eval_diagram(parse_arrow(text), theory)


def edges(d):
    return set(d.edges)


def test_identity_diagram():
    d = identity_diagram(parse_formula("x<=y /\\ z<=x"))
    assert edges(d) == {((SRC, i), (TGT, i)) for i in range(4)}
    assert identity_diagram(parse_formula("T")) == Diagram((), (), ())
    assert len(identity_diagram(parse_formula("(x . y)<=z")).edges) == 3


def test_tensor_shift():
    d = tensor(ev("r[x]"), ev("id{y<=z}"))
    assert edges(d) == {((TGT, 0), (TGT, 1)), ((SRC, 0), (TGT, 2)), ((SRC, 1), (TGT, 3))}
    assert d == ev("r[x] /\\ id{y<=z}")
    empty = identity_diagram(parse_formula("T"))
    assert tensor(empty, d) == d


def test_tensor_associative():
    ds = [eval_diagram(random_term(Theory.S_LEQ, 8, s, ["x", "y"]), Theory.S_LEQ)
          for s in range(3)]
    assert tensor(tensor(ds[0], ds[1]), ds[2]) == tensor(ds[0], tensor(ds[1], ds[2]))


def test_compose_cancels_cup_and_cap():
    assert compose(ev("t[x;y;y]"), ev("id{x<=y} /\\ r[y]")) == ev("del>{x<=y}")
    d = ev("t[x;y;y] o (id{x<=y} /\\ r[y])")
    assert not d.caps() and not d.cups()


def test_compose_with_identity_keeps_loops():
    d = Diagram.build([X, X], [X, X], [((SRC, 0), (SRC, 1)), ((TGT, 0), (TGT, 1))], loops=2)
    out = compose(identity_diagram(parse_formula("x<=x")), d)
    assert out == d and out.loops == 2


def test_cap_then_cup_is_one_loop():
    cap = Diagram.build([], [X, X], [((TGT, 0), (TGT, 1))])
    cup = Diagram.build([X, X], [], [((SRC, 0), (SRC, 1))])
    out = compose(cup, cap)
    assert out.edges == () and out.loops == 1


def test_interface_mismatch():
    with pytest.raises(InterfaceMismatch):
        compose(ev("id{y<=y}"), ev("r[x]"))


def test_compose_matches_oracle_on_random_matchings():
    rng = random.Random(2024)
    for _ in range(10_000):
        n_src, n_mid, n_tgt = rng.randint(0, 10), rng.randint(0, 10), rng.randint(0, 10)
        if (n_src + n_mid) % 2:
            n_src += 1
        if (n_mid + n_tgt) % 2:
            n_tgt += 1
        lower = random_matching(rng, n_src, n_mid)
        upper = random_matching(rng, n_mid, n_tgt)
        side = {"s": SRC, "t": TGT}
        f = Diagram.build([X] * n_src, [X] * n_mid,
                          [((side[a], i), (side[b], j)) for (a, i), (b, j) in lower])
        g = Diagram.build([X] * n_mid, [X] * n_tgt,
                          [((side[a], i), (side[b], j)) for (a, i), (b, j) in upper])
        out = compose(g, f)
        want_edges, want_loops = oracle_compose(upper, lower, n_src, n_mid, n_tgt)
        assert as_oracle(out)["edges"] == want_edges
        assert out.loops == want_loops


def test_interchange_law():
    th = Theory.S_LEQ
    d = lambda t: eval_diagram(t, th)
    for seed in range(50):
        f1 = random_term(th, 6, seed, ["x", "y"])
        f2 = random_term(th, 6, seed + 1000, ["x", "y"])
        g1 = random_term_from(th, infer_type(f1, th).target, 6, seed, ["x", "y"])
        g2 = random_term_from(th, infer_type(f2, th).target, 6, seed + 1, ["x", "y"])
        lhs = compose(tensor(d(g1), d(g2)), tensor(d(f1), d(f2)))
        rhs = tensor(compose(d(g1), d(f1)), compose(d(g2), d(f2)))
        assert lhs == rhs


def test_mirror_is_left_inverse_of_cup_free_isos():
    for text in ["c{x<=y; z<=u}", "s[x;y]", "b>{x<=y; T; z<=z}", "id{x<=y}"]:
        th = Theory.S_EQUIV if "s[" in text else Theory.S_LEQ
        d = ev(text, th)
        assert not d.cups() and not d.caps()
        back = compose(d.mirror(), d)
        assert back == identity_diagram(infer_type(parse_arrow(text), th).source)


def test_eval_generators():
    assert edges(ev("t[x;y;z]")) == {((SRC, 0), (TGT, 0)), ((SRC, 1), (SRC, 2)),
                                     ((SRC, 3), (TGT, 1))}
    assert edges(ev("s[x;y]", Theory.M_EQUIV)) == {((SRC, 0), (TGT, 1)), ((SRC, 1), (TGT, 0))}
    assert edges(ev("a[x;y;u;v]", Theory.SDOT_LEQ)) == {
        ((SRC, 0), (TGT, 0)), ((SRC, 1), (TGT, 2)), ((SRC, 2), (TGT, 1)), ((SRC, 3), (TGT, 3))}
    assert ev("id{x<=y /\\ T}") == identity_diagram(parse_formula("x<=y /\\ T"))


def test_eval_traced_owners():
    d, prov = eval_traced(parse_arrow("r[x]"), Theory.M_LEQ)
    (cap,) = d.caps()
    assert prov.owners(cap, Refl) == [()]

    d, prov = eval_traced(parse_arrow("t[x;y;y] o (id{x<=y} /\\ r[y])"), Theory.M_LEQ)
    assert not d.caps() and not d.cups()
    refl_owned = [e for e in d.edges if prov.owners(e, Refl)]
    assert len(refl_owned) == 1

    d, prov = eval_traced(parse_arrow("(r[x] /\\ r[y]) o del<{T}"), Theory.M_LEQ)
    owners = [tuple(prov.owners(c, Refl)) for c in d.caps()]
    assert len(d.caps()) == 2 and len(set(owners)) == 2


@pytest.mark.parametrize("theory", list(Theory))
def test_eval_matches_union_find_oracle(theory):
    for seed in range(150):
        f = random_term(theory, 20, seed, ["x", "y", "z"])
        assert as_oracle(eval_diagram(f, theory)) == oracle_diagram(f)


def test_json_round_trip_and_format():
    d = ev("r[x]")
    assert d.dumps().replace(" ", "") == (
        '{"source":[],"target":["x","x"],"edges":[[["t",0],["t",1]]],"loops_discarded":0}')
    e = ev("t[x;y;z] o (id{x<=y} /\\ id{y<=z})")
    assert Diagram.from_json(e.to_json()) == e


def test_renderers():
    d = ev("t[x;y;z]")
    dot = to_dot(d)
    assert dot.startswith("graph") and "s1 -- s2" in dot
    text = to_ascii(d)
    assert "cup" in text and "source: x y y z" in text


def test_loops_are_not_part_of_equality():
    a = Diagram.build([X, X], [X, X], [((SRC, 0), (TGT, 0)), ((SRC, 1), (TGT, 1))], loops=0)
    b = Diagram.build([X, X], [X, X], [((SRC, 0), (TGT, 0)), ((SRC, 1), (TGT, 1))], loops=3)
    assert a == b


def test_compose_term_agrees():
    f = Compose(parse_arrow("t[x;x;x]"), Tensor(Refl(X), Id(parse_formula("x<=x"))))
    assert eval_diagram(f, Theory.M_LEQ) == compose(ev("t[x;x;x]"), ev("r[x] /\\ id{x<=x}"))
