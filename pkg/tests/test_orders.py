import pytest
from hypothesis import given, strategies as st

from ginlab import LEX, RLEX, Comparison, DimensionMismatch, Monomial, cmp_monomials, sorted_monomials, weight
from ginlab.monideal import borel_leq
from ginlab.parsing import parse_order
from strategies import monomials, orders, same_degree_pair

GT, LT, EQ = Comparison.GREATER, Comparison.LESS, Comparison.EQUAL


def m(*e):
    return Monomial(e)


def names(ms, vars="xyz"):
    return [x.format(vars) for x in ms]


def test_rlex_example():
    assert cmp_monomials(RLEX, m(1, 2, 0), m(2, 0, 1)) is GT     # xy^2 > x^2z


def test_lex_example():
    assert cmp_monomials(LEX, m(2, 0, 1), m(1, 2, 0)) is GT      # x^2z > xy^2


def test_weight_example():
    # weights 15 vs 18: higher weight wins
    assert cmp_monomials(weight((10, 5, 3)), m(0, 3, 0), m(1, 1, 1)) is LT


def test_weight_tie_defers_to_tie_order():
    w = weight((1, 1, 1), RLEX)
    assert cmp_monomials(w, m(1, 2, 0), m(2, 0, 1)) is GT
    assert cmp_monomials(weight((1, 1, 1), LEX), m(1, 2, 0), m(2, 0, 1)) is LT


def test_sorted_listings():
    assert names(sorted_monomials(RLEX, 2, 3)) == ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]
    assert names(sorted_monomials(LEX, 2, 3)) == ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]
    for o in (LEX, RLEX, weight((3, 2, 1))):
        ms = sorted_monomials(o, 5, 3)
        assert len(ms) == 21 and ms[0] == m(5, 0, 0)


def test_weight_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        cmp_monomials(weight((3, 2, 1)), m(1, 0), m(0, 1))


@pytest.mark.parametrize("w", [(0, 1, 1), (1, 2, 1), (-1, -1, -1)])
def test_weight_validation(w):
    with pytest.raises(ValueError):
        weight(w)


def test_weight_needs_non_weight_tie():
    with pytest.raises(ValueError):
        weight((2, 1), weight((2, 1)))


@given(orders(3), same_degree_pair(3))
def test_totality_and_antisymmetry(o, pair):
    a, b = pair
    ab, ba = cmp_monomials(o, a, b), cmp_monomials(o, b, a)
    if a == b:
        assert ab is EQ and ba is EQ
    else:
        assert {ab, ba} == {GT, LT}


@given(orders(3), monomials(3), monomials(3), monomials(3))
def test_multiplicative(o, a, b, c):
    if cmp_monomials(o, a, b) is GT:
        assert cmp_monomials(o, a * c, b * c) is GT


@given(orders(3), monomials(3), monomials(3))
def test_graded(o, a, b):
    if a.degree > b.degree:
        assert cmp_monomials(o, a, b) is GT


@given(orders(4), monomials(4), st.integers(0, 3), st.integers(0, 3))
def test_borel_moves_go_up(o, a, i, j):
    if i < j:
        b = a.exchange(i, j)
        if b is not None:
            assert cmp_monomials(o, b, a) is GT


@given(orders(3), same_degree_pair(3))
def test_orders_refine_borel(o, pair):
    a, b = pair
    if a != b and borel_leq(a, b):
        assert cmp_monomials(o, a, b) is LT


def test_sorted_is_strictly_descending():
    for o in (LEX, RLEX, weight((5, 3, 3, 1), RLEX)):
        ms = sorted_monomials(o, 4, 4)
        for a, b in zip(ms, ms[1:]):
            assert cmp_monomials(o, a, b) is GT


@pytest.mark.parametrize("text,expect", [
    ("lex", LEX), ("rlex", RLEX), ("weight:10,5,3;tie=lex", weight((10, 5, 3))),
    (" weight: 4,2,1 ; tie=rlex ", weight((4, 2, 1), RLEX)),
])
def test_parse_order(text, expect):
    assert parse_order(text) == expect


@pytest.mark.parametrize("text", ["grevlex", "weight:1,2;tie=lex", "weight:3,2", "weight:a;tie=lex", ""])
def test_parse_order_rejects(text):
    with pytest.raises(ValueError):
        parse_order(text)


def test_order_string_round_trip():
    for o in (LEX, RLEX, weight((10, 5, 3)), weight((4, 2, 1), RLEX)):
        assert parse_order(str(o)) == o
