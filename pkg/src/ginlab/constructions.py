"""Ideals that separate monomial orders and expose regularity gaps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import DimensionMismatch, NoDisagreement
from .groebner import Ideal
from .monomial import Monomial, exponent_tuples
from .orders import OrderSpec, sorted_monomials
from .polynomial import Polynomial
from .ring import Ring

DEFAULT_DMAX = 6


@dataclass(frozen=True)
class Disagreement:
    d: int
    k: int  # 1-based position in the descending degree-d listing
    m1: Monomial
    m2: Monomial


@dataclass(frozen=True)
class GapWitness:
    k: int
    d: int


def _resolve_ring(ring, *orders) -> Ring:
    sizes = {o.nvars for o in orders if o.nvars is not None}
    if len(sizes) > 1:
        raise DimensionMismatch(f"orders are for different numbers of variables: {sizes}")
    if ring is None:
        if not sizes:
            raise ValueError("lex/rlex do not fix the number of variables; pass a ring")
        return Ring.of(sizes.pop())
    if sizes and sizes != {ring.n}:
        raise DimensionMismatch(f"orders do not fit {ring}")
    return ring


def first_disagreement(o1: OrderSpec, o2: OrderSpec, dmax: int = DEFAULT_DMAX,
                       ring: Ring = None) -> Optional[Disagreement]:
    if dmax < 1:
        raise ValueError("dmax must be at least 1")
    n = _resolve_ring(ring, o1, o2).n
    if o1 == o2:
        return None
    for d in range(1, dmax + 1):
        for pos, (a, b) in enumerate(zip(sorted_monomials(o1, d, n), sorted_monomials(o2, d, n))):
            if a != b:
                return Disagreement(d, pos + 1, a, b)
    return None


def distinguishing_ideal(o1: OrderSpec, o2: OrderSpec, dmax: int = DEFAULT_DMAX,
                         ring: Ring = None) -> Ideal:
    """(M_1, ..., M_{k-1}, M_k + M_k'): its gins under o1 and o2 differ."""
    ring = _resolve_ring(ring, o1, o2)
    dis = first_disagreement(o1, o2, dmax, ring)
    if dis is None:
        raise NoDisagreement(f"{o1} and {o2} agree through degree {dmax}")
    top = sorted_monomials(o1, dis.d, ring.n)[: dis.k - 1]
    gens = [Polynomial.from_monomial(ring, m) for m in top]
    gens.append(Polynomial(ring, {dis.m1.exponents: 1, dis.m2.exponents: 1}))
    return Ideal(ring, tuple(gens))


def _x(n: int, i: int, p: int = 1) -> tuple:
    e = [0] * n
    e[i - 1] = p
    return tuple(e)


def _witness_monomials(n: int, k: int, d: int) -> tuple[tuple, tuple]:
    """(x_1^d x_k, x_{k-1}^{d+1}) as exponent tuples."""
    a = list(_x(n, 1, d))
    a[k - 1] += 1
    return tuple(a), _x(n, k - 1, d + 1)


def rlex_gap_witness(order: OrderSpec, dmax: int = DEFAULT_DMAX,
                     ring: Ring = None) -> Optional[GapWitness]:
    """First (k, d), d ascending then k ascending, with x_1^d x_k > x_{k-1}^{d+1}."""
    if dmax < 1:
        raise ValueError("dmax must be at least 1")
    n = _resolve_ring(ring, order).n
    for d in range(1, dmax + 1):
        # k = 2 never works: x_1^{d+1} is Borel-above x_1^d x_2
        for k in range(3, n + 1):
            a, b = _witness_monomials(n, k, d)
            if order.key(a) > order.key(b):
                return GapWitness(k, d)
    return None


def is_rlex_up_to(order: OrderSpec, dmax: int = DEFAULT_DMAX, ring: Ring = None) -> bool:
    """Bounded certificate: no gap witness in degrees up to dmax."""
    return rlex_gap_witness(order, dmax, ring) is None


def regularity_gap_ideal(k: int, d: int, ring: Ring) -> Ideal:
    """All degree-(d+1) monomials in x_1..x_{k-1} except x_{k-1}^{d+1}, plus
    x_{k-1}^{d+1} + x_1^d x_k."""
    n = ring.n
    if not 3 <= k <= n:
        raise ValueError(f"need 3 <= k <= n = {n}, got k = {k}")
    if d < 1:
        raise ValueError(f"need d >= 1, got d = {d}")
    top = _x(n, k - 1, d + 1)
    gens = []
    for e in exponent_tuples(k - 1, d + 1):
        full = e + (0,) * (n - k + 1)
        if full != top:
            gens.append(Polynomial(ring, {full: 1}))
    witness, _ = _witness_monomials(n, k, d)
    gens.append(Polynomial(ring, {top: 1, witness: 1}))
    return Ideal(ring, tuple(gens))
