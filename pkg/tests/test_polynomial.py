from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ginlab import (LEX, RLEX, Monomial, Polynomial, Ring, TransformMatrix, ZeroPolynomialError,
                    apply_transform, leading_term, parse_polynomial, poly_arith)
from ginlab.errors import SingularMatrixError
from oracles import sympy_transform
from strategies import polynomials

R3 = Ring(("x", "y", "z"))


def P(text, ring=R3):
    return parse_polynomial(text, ring)


def test_sum_product_scalar():
    assert P("x^2 + y^2") + P("-y^2") == P("x^2")
    assert P("x + y") * P("x - y") == P("x^2 - y^2")
    assert (P("x^3 + 2*y") * 0).is_zero()
    r = poly_arith(P("x"), P("y"), 3)
    assert r.sum == P("x + y") and r.product == P("x*y") and r.scalar_multiple == P("3*x")


def test_canonical_form():
    f = Polynomial(R3, {(1, 0, 0): 1, Monomial((1, 0, 0)): -1, (0, 1, 0): 0})
    assert f.is_zero() and f.terms == []
    assert len(P("x + x + y")) == 2


@pytest.mark.parametrize("order,text,lead", [
    (RLEX, "x^2*y + x*y^2", (2, 1, 0)),
    (LEX, "x^2 + y^2", (2, 0, 0)),
    (RLEX, "x^2*z + x*y^2", (1, 2, 0)),
])
def test_leading_term(order, text, lead):
    t = leading_term(order, P(text))
    assert t.monomial.exponents == lead and t.coeff == 1


def test_leading_term_of_zero():
    with pytest.raises(ZeroPolynomialError):
        leading_term(LEX, Polynomial.zero(R3))


def test_homogeneity_and_degree():
    assert P("x^2 + y*z").is_homogeneous()
    assert not P("x^2 + y").is_homogeneous()
    assert P("x^2 + y").degree() == 2


def test_format_round_trip():
    for text in ["x^2*y + 3/2*x*y^2", "-x + 7*z", "x*y*z - 1/3*y^3"]:
        f = P(text)
        assert P(f.format()) == f
        assert P(f.format(RLEX)).format(RLEX) == f.format(RLEX)


def test_exact_rational_arithmetic():
    f = P("1/3*x") * P("3/7*y")
    assert f.coefficient(Monomial((1, 1, 0))) == Fraction(1, 7)


# -- coordinate changes ---------------------------------------------------------


def test_identity_and_swap():
    f = P("x^2 + 3*x*y*z")
    assert apply_transform(TransformMatrix.identity(3), f) == f
    swap = TransformMatrix.permutation((1, 0, 2))
    assert apply_transform(swap, P("x^2")) == P("y^2")


def test_column_convention():
    # x -> x, y -> x + y: column j holds the image of x_j
    g = TransformMatrix(((1, 1), (0, 1)))
    R2 = Ring(("x", "y"))
    assert apply_transform(g, P("x^2 + x*y", R2)) == P("2*x^2 + x*y", R2)


def test_singular_rejected():
    with pytest.raises(SingularMatrixError):
        TransformMatrix(((1, 2), (2, 4)))


def test_matches_sympy_substitution():
    from ginlab import parse_ideal
    I = parse_ideal("x^3 + 2*x*y*z, y^2 - 5*x*z", R3)
    rows = ((3, -1, 4), (1, 5, -9), (2, 6, 5))
    g = TransformMatrix(rows)
    ours = [apply_transform(g, f).coeffs for f in I.generators]
    assert ours == sympy_transform(I, rows)


matrices = st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3)


def _transform(rows):
    try:
        return TransformMatrix(tuple(map(tuple, rows)))
    except SingularMatrixError:
        return TransformMatrix.identity(3)


@settings(max_examples=40)
@given(matrices, polynomials(R3), polynomials(R3))
def test_transform_is_a_ring_map(rows, f, h):
    g = _transform(rows)
    assert apply_transform(g, f + h) == apply_transform(g, f) + apply_transform(g, h)
    assert apply_transform(g, f * h) == apply_transform(g, f) * apply_transform(g, h)


@settings(max_examples=40)
@given(matrices, polynomials(R3))
def test_inverse_undoes(rows, f):
    g = _transform(rows)
    assert apply_transform(g.inverse(), apply_transform(g, f)) == f


@given(matrices, polynomials(R3))
def test_preserves_homogeneity(rows, f):
    f = Polynomial(R3, {e: c for e, c in f.coeffs.items() if sum(e) == 2})
    assert apply_transform(_transform(rows), f).is_homogeneous()
