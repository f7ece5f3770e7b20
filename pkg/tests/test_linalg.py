import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from ginlab.linalg import SparseEchelon, determinant, inverse, rank
from oracles import sympy_rank

small = st.integers(-4, 4)


@settings(max_examples=60)
@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_rank_matches_sympy(m, n, data):
    rows = [data.draw(st.lists(small, min_size=n, max_size=n)) for _ in range(m)]
    assert rank(rows) == sympy_rank(rows)


def test_rank_rational_and_sparse():
    assert rank([[Fraction(1, 2), 1], [1, 2]]) == 1
    assert rank([{0: 1, 5: 2}, {5: 4, 0: 2}, {3: 1}]) == 2
    ech = SparseEchelon()
    assert ech.add({1: 3}) and not ech.add({1: -6}) and ech.rank == 1


@settings(max_examples=60)
@given(st.integers(1, 5), st.data())
def test_determinant_and_inverse(n, data):
    rows = [data.draw(st.lists(small, min_size=n, max_size=n)) for _ in range(n)]
    import sympy as sp
    assert determinant(rows) == sp.Matrix(rows).det()
    if determinant(rows):
        inv = inverse(rows)
        prod = [[sum(Fraction(rows[i][k]) * inv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        assert prod == [[int(i == j) for j in range(n)] for i in range(n)]


def test_determinant_needs_pivoting():
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[0, 0], [1, 0]]) == 0
    assert determinant([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)
