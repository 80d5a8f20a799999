import pytest

from lineq.analysis import diversify
from lineq.diagram import eval_diagram
from lineq.proofterm import Refl, Theory, infer_type, random_term
from lineq.rewrite import (
    BudgetExceeded, PreconditionCongConsumesR, PreconditionError, PreconditionNotDiversified,
    PreconditionNotRLess, PreconditionTopInType, count_refl, delta_sigma_purge, develop,
    is_delta_sigma_less, is_developed, is_r_factorized, is_r_less, is_s_normal, r_normal,
    s_normal,
)
from lineq.rewrite.shapes import _generators
from lineq.syntax import term_vars
from lineq.text import parse_arrow

M, E = Theory.M_LEQ, Theory.M_EQUIV
p = parse_arrow


def weighted_refl(f):
    # a dotted r[t] draws one cap per variable occurrence of t
    return sum(len(term_vars(g.t)) for g in _generators(f) if isinstance(g, Refl))


def preserved(f, g, theory):
    return (infer_type(f, theory) == infer_type(g, theory)
            and eval_diagram(f, theory) == eval_diagram(g, theory))


def test_develop_pads_with_identity():
    out, d = develop(p("t[x;y;z]"), M)
    assert out == p("t[x;y;z] o id{x<=y /\\ y<=z}")
    assert [(s.eq, s.direction.value) for s in d.steps] == [("cat1R", "R2L")]


def test_develop_splits_tensors():
    f = p("t[x;y;z] /\\ t[x;y;z]")
    out, d = develop(f, M)
    assert is_developed(out) and preserved(f, out, M)
    assert d.replay(M) == out


def test_develop_fixpoint():
    f = p("t[x;y;z] o id{x<=y /\\ y<=z}")
    out, d = develop(f, M)
    assert out == f and len(d) == 0


def test_r_normal_examples():
    fr, fp, _ = r_normal(p("r[x]"), M)
    assert (fr, fp) == (p("r[x]"), p("id{T}"))

    f = p("t[x;y;y] o (id{x<=y} /\\ r[y])")
    fr, fp, d = r_normal(f, M)
    assert count_refl(fr) == 0 and not eval_diagram(f, M).caps()
    assert preserved(f, d.end, M)

    f = p("(r[x] /\\ id{y<=z}) o sig<{y<=z}")
    fr, fp, d = r_normal(f, M)
    assert fr == p("r[x] /\\ id{y<=z}")
    assert count_refl(fr) == 1 and len(eval_diagram(f, M).caps()) == 1
    assert is_r_less(fp) and preserved(f, d.end, M)


def test_r_normal_cap_bijection_dotted():
    th = Theory.SDOT_LEQ
    f = p("r[(x . y)] /\\ id{x<=y}")
    fr, _, _ = r_normal(f, th)
    assert weighted_refl(fr) == len(eval_diagram(f, th).caps()) == 2


def test_r_normal_refuses_cong_on_r():
    th = Theory.SDOT_LEQ
    f = p("a[x;x;y;y] o (r[x] /\\ r[y]) o del<{T}")
    with pytest.raises(PreconditionCongConsumesR):
        r_normal(f, th)


def test_delta_sigma_examples():
    out, _ = delta_sigma_purge(p("del>{x<=y} o del<{x<=y}"), M)
    assert out == p("id{x<=y}")
    out, _ = delta_sigma_purge(p("sig>{x==y} o sig<{x==y}"), E)
    assert out == p("id{x==y}")
    out, d = delta_sigma_purge(p("t[x;y;z]"), M)
    assert out == p("t[x;y;z]") and len(d) == 0


def test_delta_sigma_preconditions():
    with pytest.raises(PreconditionNotRLess):
        delta_sigma_purge(p("r[x]"), M)
    with pytest.raises(PreconditionTopInType):
        delta_sigma_purge(p("del<{x<=y}"), M)


def test_delta_sigma_top_to_top():
    f = p("del>{T} o del<{T}")
    out, d = delta_sigma_purge(f, M)
    assert is_delta_sigma_less(out) and preserved(f, out, M)


def test_s_normal_examples():
    out, _ = s_normal(p("s[y;x] o s[x;y]"), E)
    assert out == p("id{x==y}")
    # developed output: the lone generator gets an identity first factor
    out, _ = s_normal(p("s[x;y]"), E)
    assert out == p("s[x;y] o id{x==y}")
    out, d = s_normal(p("s[x;y] o s[y;x] o s[x;y]"), E)
    assert out == p("s[x;y] o id{x==y}")
    assert d.replay(E) == out


def test_s_normal_preconditions():
    with pytest.raises(PreconditionNotDiversified):
        s_normal(p("s[x;x]"), E)
    with pytest.raises(PreconditionError):
        s_normal(p("t[x;y;z]"), M)


def test_budget():
    f = p("t[x;y;z] /\\ t[x;y;z] /\\ t[x;y;z]")
    with pytest.raises(BudgetExceeded):
        develop(f, M, budget=1)


@pytest.mark.parametrize("theory", [Theory.M_EQUIV, Theory.S_EQUIV, Theory.SDOT_EQUIV])
def test_s_normal_on_diversified_random_terms(theory):
    for seed in range(60):
        f, _ = diversify(random_term(theory, 12, seed, ["x", "y"]), theory)
        out, d = s_normal(f, theory)
        assert is_s_normal(out) and is_developed(out)
        assert preserved(f, out, theory) and d.replay(theory) == out


@pytest.mark.parametrize("theory", list(Theory))
def test_r_normal_on_random_terms(theory):
    for seed in range(60):
        f = random_term(theory, 12, seed, ["x", "y"])
        try:
            fr, fp, d = r_normal(f, theory)
        except PreconditionCongConsumesR:
            continue
        assert is_r_factorized(fr) and is_r_less(fp)
        assert weighted_refl(fr) == len(eval_diagram(f, theory).caps())
        assert preserved(f, d.end, theory) and d.replay(theory) == d.end
