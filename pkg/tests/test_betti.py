import random

from ginlab import MonomialIdeal, Ring, betti_table, regularity_borel, regularity_monomial
from ginlab.parsing import parse_monomials
from corpus import random_borel_ideal
from oracles import eliahou_kervaire_betti

R2 = Ring(("x", "y"))
R3 = Ring(("x", "y", "z"))


def M(text, ring):
    return MonomialIdeal(ring, parse_monomials(text, ring))


def test_regular_sequence():
    assert betti_table(M("x, y", R2)).triples() == [(0, 0, 1), (1, 1, 2), (2, 2, 1)]


def test_principal():
    assert betti_table(M("x^2", R2)).triples() == [(0, 0, 1), (1, 2, 1)]
    assert regularity_monomial(M("x^2", R2)) == 2


def test_lex_initial_ideal_of_inline_example():
    B = betti_table(M("x^2, x*y*z, y^3*z", R3))
    assert B.max_shift() == 3
    assert regularity_monomial(M("x^2, x*y*z, y^3*z", R3)) == 4
    assert B.triples() == [(0, 0, 1), (1, 2, 1), (1, 3, 1), (1, 4, 1), (2, 4, 1), (2, 5, 1)]


def test_shape_invariants():
    B = betti_table(M("x^3, x^2*y, x*y^2, x^2*z^2", R3))
    assert B[(0, 0)] == 1
    assert all(j >= i for i, j, _ in B.triples())
    # alternating sum of beta_{i,j} t^j at t=1 is 0 for a proper nonzero ideal in >= 1 vars
    assert sum((-1) ** i * v for i, _, v in B.triples()) == 0
    assert B.projective_dimension() <= 3


def test_non_borel_ideals():
    # two disjoint monomials: a complete intersection
    B = betti_table(M("x*z, y^2", R3))
    assert B.triples() == [(0, 0, 1), (1, 2, 2), (2, 4, 1)]
    assert regularity_monomial(M("x*z, y^2", R3)) == 3


def test_matches_eliahou_kervaire_on_borel_corpus():
    rng = random.Random(2)
    for _ in range(25):
        J = random_borel_ideal(rng)
        assert betti_table(J).entries == eliahou_kervaire_betti(J), J
        assert regularity_monomial(J) == regularity_borel(J)


def test_regularity_bounds_generator_degrees():
    rng = random.Random(6)
    for _ in range(30):
        n = rng.randint(2, 4)
        gens = [tuple(rng.randint(0, 3) for _ in range(n)) for _ in range(rng.randint(1, 4))]
        gens = [g for g in gens if any(g)] or [(1,) + (0,) * (n - 1)]
        J = MonomialIdeal(Ring.of(n), gens)
        assert regularity_monomial(J) >= J.max_degree()


def test_format_renders_table():
    text = betti_table(M("x, y", R2)).format()
    assert text.splitlines()[1].split() == ["0:", "1", "2", "1"]
