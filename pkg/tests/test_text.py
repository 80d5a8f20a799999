import pytest

from lineq.proofterm import Compose, Tensor, Theory, random_term
from lineq.text import ParseError, parse_arrow, parse_formula, show_arrow, show_formula


@pytest.mark.parametrize("theory", list(Theory))
def test_round_trip_random_terms(theory):
    for seed in range(1000 // len(Theory) + 1):
        f = random_term(theory, 15, seed, ["x", "y", "z"])
        assert parse_arrow(show_arrow(f)) == f


def test_composition_is_right_associated():
    f = parse_arrow("id{x<=y} o id{x<=y} o id{x<=y}")
    assert isinstance(f, Compose) and isinstance(f.f, Compose)
    assert show_arrow(f) == "id{x<=y} o id{x<=y} o id{x<=y}"


def test_tensor_is_left_associated_and_binds_tighter():
    f = parse_arrow("id{x<=x} /\\ id{y<=y} /\\ id{z<=z} o id{((x<=x /\\ y<=y) /\\ z<=z)}")
    assert isinstance(f, Compose)
    assert isinstance(f.g, Tensor) and isinstance(f.g.f, Tensor)


def test_formula_printing():
    a = parse_formula("x<=y /\\ (T /\\ (x.y)==z)")
    assert show_formula(a) == "x<=y /\\ (T /\\ (x . y)==z)"
    assert parse_formula(show_formula(a)) == a


@pytest.mark.parametrize("text", ["t[x;y]", "id{x<=}", "r[x", "foo[x]", "id{x<=y} o", "r[T]"])
def test_parse_errors(text):
    with pytest.raises(ParseError) as err:
        parse_arrow(text)
    assert err.value.line == 1 and err.value.column >= 1
