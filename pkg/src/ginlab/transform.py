"""Invertible linear changes of coordinates g in GL(S_1)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatch, SingularMatrixError
from .linalg import determinant, inverse
from .polynomial import Polynomial, mul_dicts


@dataclass(frozen=True)
class TransformMatrix:
    """An invertible n x n rational matrix.

    Acts on polynomials column-wise: x_j is replaced by sum_i entries[i][j] * x_i.
    """

    entries: tuple[tuple[Fraction, ...], ...]
    det: Fraction = field(init=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("transform must be a nonempty square matrix")
        det = determinant(rows)
        if det == 0:
            raise SingularMatrixError("transform matrix is singular")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "det", det)

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int) -> TransformMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def permutation(cls, perm) -> TransformMatrix:
        """x_j -> x_{perm[j]}."""
        n = len(perm)
        return cls(tuple(tuple(int(perm[j] == i) for j in range(n)) for i in range(n)))

    def inverse(self) -> TransformMatrix:
        return TransformMatrix(tuple(tuple(r) for r in inverse(self.entries)))

    def images(self) -> list[dict]:
        """The linear form substituted for each variable, as coefficient dicts."""
        n = self.n
        out = []
        for j in range(n):
            form = {}
            for i in range(n):
                c = self.entries[i][j]
                if c:
                    e = [0] * n
                    e[i] = 1
                    form[tuple(e)] = c
            out.append(form)
        return out


def substitute(coeffs: dict, images: list[dict]) -> dict:
    """Expand sum c * prod_j images[j]^e_j; works for int or Fraction coefficients."""
    n = len(images)
    powers = [[{(0,) * n: 1}] for _ in range(n)]
    out: dict = {}
    for exps, c in coeffs.items():
        acc = {(0,) * n: c}
        for j, e in enumerate(exps):
            if not e:
                continue
            pj = powers[j]
            while len(pj) <= e:
                pj.append(mul_dicts(pj[-1], images[j]))
            acc = mul_dicts(acc, pj[e])
        for m, v in acc.items():
            s = out.get(m, 0) + v
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def apply_transform(g: TransformMatrix, f: Polynomial) -> Polynomial:
    if g.n != f.ring.n:
        raise DimensionMismatch(f"{g.n}x{g.n} transform on {f.ring}")
    return Polynomial._raw(f.ring, substitute(f._coeffs, g.images()))
