"""Graded monomial orders with x1 > x2 > ... > xn.

Every order is realised by a sort key on exponent tuples: a larger key means a
larger monomial.  Comparisons, leading terms and sorted listings all go
through :meth:`OrderSpec.key`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import DimensionMismatch
from .monomial import Monomial, exponent_tuples


class OrderKind(enum.Enum):
    LEX = "lex"
    REVLEX = "rlex"
    WEIGHT = "weight"


class Comparison(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class OrderSpec:
    kind: OrderKind
    weights: Optional[tuple[int, ...]] = None
    tie: Optional[OrderSpec] = None

    def __post_init__(self):
        if self.kind is OrderKind.WEIGHT:
            if not self.weights:
                raise ValueError("weight order needs a weight vector")
            w = tuple(self.weights)
            if any(not isinstance(x, int) or isinstance(x, bool) or x <= 0 for x in w):
                raise ValueError(f"weights must be positive integers, got {w}")
            if any(a < b for a, b in zip(w, w[1:])):
                # otherwise some x_{i+1} would outrank x_i
                raise ValueError(f"weights must be non-increasing, got {w}")
            object.__setattr__(self, "weights", w)
            if self.tie is None or self.tie.kind is OrderKind.WEIGHT:
                raise ValueError("weight order needs a lex or rlex tie-break")
        elif self.weights is not None or self.tie is not None:
            raise ValueError(f"{self.kind.value} takes no weights or tie-break")

    @property
    def nvars(self) -> Optional[int]:
        """Number of variables this order pins down, if any (weight orders only)."""
        return len(self.weights) if self.weights else None

    def key(self, exps: tuple[int, ...]) -> tuple:
        deg = sum(exps)
        if self.kind is OrderKind.LEX:
            return (deg,) + tuple(exps)
        if self.kind is OrderKind.REVLEX:
            # greater iff the last nonzero entry of a - b is negative
            return (deg,) + tuple(-e for e in reversed(exps))
        if len(exps) != len(self.weights):
            raise DimensionMismatch(
                f"weight vector has length {len(self.weights)}, monomial has {len(exps)}"
            )
        return (deg, sum(w * e for w, e in zip(self.weights, exps))) + self.tie.key(exps)

    def __str__(self):
        if self.kind is OrderKind.WEIGHT:
            return "weight:" + ",".join(map(str, self.weights)) + f";tie={self.tie}"
        return self.kind.value


LEX = OrderSpec(OrderKind.LEX)
RLEX = OrderSpec(OrderKind.REVLEX)


def lex() -> OrderSpec:
    return LEX


def rlex() -> OrderSpec:
    return RLEX


def weight(weights, tie: OrderSpec = LEX) -> OrderSpec:
    return OrderSpec(OrderKind.WEIGHT, tuple(weights), tie)


class KeyCache(dict):
    """Memoised ``order.key`` lookups for hot loops."""

    def __init__(self, order: OrderSpec):
        super().__init__()
        self.order = order

    def __missing__(self, exps):
        k = self[exps] = self.order.key(exps)
        return k


def cmp_monomials(order: OrderSpec, a: Monomial, b: Monomial) -> Comparison:
    if a.n != b.n:
        raise DimensionMismatch(f"monomials in {a.n} and {b.n} variables")
    ka, kb = order.key(a.exponents), order.key(b.exponents)
    if ka == kb:
        return Comparison.EQUAL
    return Comparison.GREATER if ka > kb else Comparison.LESS


def sorted_monomials(order: OrderSpec, d: int, n: int) -> list[Monomial]:
    """All degree-d monomials in n variables, strictly descending under order."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if order.nvars is not None and order.nvars != n:
        raise DimensionMismatch(f"order is for {order.nvars} variables, ring has {n}")
    exps = sorted(exponent_tuples(n, d), key=order.key, reverse=True)
    return [Monomial(e) for e in exps]
