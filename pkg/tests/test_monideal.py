import random

import pytest
from hypothesis import given, strategies as st

from ginlab import (LEX, RLEX, MonomialIdeal, NotBorelFixedError, Ring, borel_leq, cmp_monomials,
                    hilbert_count, is_borel_fixed, is_segment, is_segment_ideal, minimal_generators,
                    regularity_borel, sorted_monomials, weight)
from ginlab.monomial import Monomial
from ginlab.orders import Comparison
from ginlab.parsing import parse_monomials
from corpus import borel_closure, random_weight_order
from oracles import brute_segment_ideal
from strategies import orders, same_degree_pair

R = Ring(("x", "y", "z"))
R6 = Ring.of(6)
W = weight((10, 5, 3), LEX)


def M(text, ring=R):
    return MonomialIdeal(ring, parse_monomials(text, ring))


def mons(text, ring=R):
    return parse_monomials(text, ring)


def test_minimal_generators():
    assert minimal_generators(mons("x^2, x^3, x*y"), R) == M("x^2, x*y")
    assert minimal_generators(mons("x, y, x*y"), R).gens == tuple(mons("x, y"))
    gens = mons("x^3, x^2*y, x^2*z, x*y^3, x*y^2*z")
    assert set(minimal_generators(gens, R).gens) == set(gens)


def test_canonical_ordering_and_format():
    J = M("y^5, x*y, x^2")
    assert J.format() == "(x^2, x*y, y^5)"
    assert J == M("x^2, x*y, y^5, x^3*z")


def test_is_borel_fixed():
    assert is_borel_fixed(M("x^2, x*y, y^2"))
    assert not is_borel_fixed(M("x*z"))
    assert is_borel_fixed(M("x^3, x^2*y, x^2*z, x*y^3, x*y^2*z"))


def test_borel_leq_examples():
    assert borel_leq(Monomial((1, 2, 0)), Monomial((2, 1, 0)))
    a, b = Monomial((2, 0, 1)), Monomial((1, 2, 0))
    assert not borel_leq(a, b) and not borel_leq(b, a)
    assert borel_leq(a, a)
    with pytest.raises(ValueError):
        borel_leq(Monomial((1, 0, 0)), Monomial((2, 0, 0)))


def test_is_segment_examples():
    assert is_segment(mons("x^2, x*y"), W)
    assert not is_segment(mons("x^2, y^2"), LEX)


def test_is_segment_ideal_examples():
    assert is_segment_ideal(M("x^2, x*y, y^5"), W)
    assert not is_segment_ideal(M("x^3, x^2*y, x^2*z, x*y^3, x*y^2*z"), RLEX)
    assert is_segment_ideal(M("x1^3, x1^2*x2, x1*x2^2, x2^3", R6), RLEX)


def test_hilbert_count_examples():
    assert hilbert_count(M("x^2, x*y"), 2) == 2
    assert hilbert_count(M("x^2, x*y"), 3) == 5
    assert hilbert_count(M("x1^3, x1^2*x2, x1*x2^2, x2^3", R6), 3) == 4


def test_regularity_borel_examples():
    assert regularity_borel(M("x1^3, x1^2*x2, x1*x2^2, x2^3", R6)) == 3
    assert regularity_borel(M("x")) == 1
    assert regularity_borel(M("x^3, x^2*y, x*y^2, x^2*z^2")) == 4
    with pytest.raises(NotBorelFixedError):
        regularity_borel(M("x*z"))


# -- properties -------------------------------------------------------------


def _exchange_closed(stratum, n):
    for e in stratum:
        for j in range(n):
            for i in range(j):
                if e[j]:
                    f = list(e)
                    f[i] += 1
                    f[j] -= 1
                    if tuple(f) not in stratum:
                        return False
    return True


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_segments_are_borel(n, d, data):
    order = data.draw(orders(n))
    ms = sorted_monomials(order, d, n)
    k = data.draw(st.integers(1, len(ms)))
    prefix = ms[:k]
    assert is_segment(prefix, order)
    assert _exchange_closed({m.exponents for m in prefix}, n)


def test_segment_ideals_are_borel():
    rng = random.Random(4)
    hits = 0
    for _ in range(200):
        n = rng.randint(2, 4)
        order = rng.choice([LEX, RLEX, random_weight_order(rng, n)])
        gens = []
        for d in rng.sample(range(1, 5), rng.randint(1, 2)):
            ms = sorted_monomials(order, d, n)
            gens += ms[:rng.randint(1, len(ms))]
        J = MonomialIdeal(Ring.of(n), gens)
        if is_segment_ideal(J, order):
            hits += 1
            assert is_borel_fixed(J)
    assert hits > 50


def test_segment_ideal_criterion_matches_search():
    rng = random.Random(9)
    seen = {True: 0, False: 0}
    for _ in range(60):
        n = rng.randint(2, 3)
        order = rng.choice([LEX, RLEX, random_weight_order(rng, n)])
        seeds = [tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(rng.randint(1, 3))]
        seeds = [e for e in seeds if 0 < sum(e) <= 3] or [(1,) + (0,) * (n - 1)]
        if rng.random() < 0.5:
            seeds = list(borel_closure(seeds, n))
        J = MonomialIdeal(Ring.of(n), seeds)
        verdict = is_segment_ideal(J, order)
        assert verdict == brute_segment_ideal(J, order), (J, order)
        seen[verdict] += 1
    assert seen[True] and seen[False]


@given(same_degree_pair(4), same_degree_pair(4))
def test_borel_order_partial_order(p, q):
    a, b = p
    assert borel_leq(a, a)
    if borel_leq(a, b) and borel_leq(b, a):
        assert a == b
    c = q[0]
    if c.degree == a.degree and borel_leq(a, b) and borel_leq(b, c):
        assert borel_leq(a, c)


@given(same_degree_pair(4), orders(4))
def test_monomial_orders_refine_borel(pair, order):
    a, b = pair
    if a != b and borel_leq(a, b):
        assert cmp_monomials(order, a, b) is Comparison.LESS


@given(st.lists(st.tuples(*[st.integers(0, 3)] * 3).filter(any), min_size=1, max_size=4), st.integers(0, 6))
def test_hilbert_count_monotone(gens, d):
    J = MonomialIdeal(R, gens)
    assert hilbert_count(J, d + 1) >= hilbert_count(J, d)


def test_sorted_prefixes_are_segments():
    for order in (LEX, RLEX, W):
        ms = sorted_monomials(order, 3, 3)
        assert all(is_segment(ms[:k], order) for k in range(1, len(ms) + 1))
        assert not is_segment(ms[1:2], order)
