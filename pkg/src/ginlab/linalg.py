"""Exact linear algebra: fraction-free ranks, determinants, inverses."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import SingularMatrixError


def _content(row: dict) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


class SparseEchelon:
    """Incremental integer row echelon form with rows as {column: int} dicts.

    Elimination is fraction-free: a row is cleared against a pivot row by
    cross-multiplication, then divided by its content.
    """

    def __init__(self):
        self.pivots: dict = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row) -> bool:
        """Insert a row; return True if it increased the rank."""
        row = {c: int(v) for c, v in dict(row).items() if v}
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                g = _content(row)
                if row[col] < 0:
                    g = -g
                self.pivots[col] = {c: v // g for c, v in row.items()}
                return True
            a, b = piv[col], row[col]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: a * v for c, v in row.items()}
            for c, v in piv.items():
                s = new.get(c, 0) - b * v
                if s:
                    new[c] = s
                else:
                    new.pop(c, None)
            g = _content(new)
            row = {c: v // g for c, v in new.items()} if g > 1 else new
        return False


def rank(rows) -> int:
    """Exact rank of a matrix given as sparse dict rows or dense rational lists."""
    ech = SparseEchelon()
    for r in rows:
        if not isinstance(r, dict):
            r = dict(enumerate(r))
        den = 1
        for v in r.values():
            den = den * Fraction(v).denominator // gcd(den, Fraction(v).denominator)
        ech.add({c: Fraction(v) * den for c, v in r.items()})
    return ech.rank


def determinant(matrix) -> Fraction:
    """Bareiss fraction-free determinant (rational entries are cleared row-wise)."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for r in matrix:
        r = [Fraction(v) for v in r]
        den = 1
        for v in r:
            den = den * v.denominator // gcd(den, v.denominator)
        scale /= den
        a.append([int(v * den) for v in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] * scale


def inverse(matrix) -> list[list[Fraction]]:
    """Gauss-Jordan inverse over QQ."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
