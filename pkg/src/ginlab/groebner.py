"""Homogeneous ideals, multivariate division and Buchberger's algorithm."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

try:
    from gmpy2 import gcd, mpz as _big
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from math import gcd

    _big = int

from .errors import DimensionMismatch, NonHomogeneousError, ZeroPolynomialError
from .linalg import SparseEchelon
from .monomial import Monomial, exponent_tuples
from .orders import KeyCache, OrderSpec
from .polynomial import Polynomial, leading_term, primitive_int_dict
from .ring import Ring


@dataclass(frozen=True)
class Ideal:
    ring: Ring
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        for f in gens:
            if f.ring.n != self.ring.n:
                raise DimensionMismatch(f"generator {f} is not in {self.ring}")
            if f.is_zero():
                raise ZeroPolynomialError("generators must be nonzero")
            if not f.is_homogeneous():
                raise NonHomogeneousError(f"generator {f} is not homogeneous")
        object.__setattr__(self, "generators", gens)

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.generators) + ")"


@dataclass(frozen=True)
class GroebnerBasis:
    order: OrderSpec
    elements: tuple[Polynomial, ...]
    reduced: bool = False

    @property
    def ring(self) -> Ring:
        return self.elements[0].ring

    def leading_monomials(self) -> list[Monomial]:
        return [leading_term(self.order, f).monomial for f in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


# -- integer kernels ----------------------------------------------------------
#
# Polynomials are {exponent tuple: int} dicts kept primitive with a positive
# leading coefficient.  ``keys`` is a KeyCache for the active order.  Inside
# the kernels coefficients are gmpy2 integers when available.


def _bigdict(p):
    return {e: _big(v) for e, v in p.items()}


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lead(p, keys):
    return max(p, key=keys.__getitem__)


def _content(*dicts):
    g = 0
    for d in dicts:
        for v in d.values():
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def _primitive(p, keys):
    if not p:
        return p
    g = _content(p)
    if p[_lead(p, keys)] < 0:
        g = -g
    return {e: v // g for e, v in p.items()}


class _Basis:
    """Basis polynomials with cached leading data, in insertion order."""

    def __init__(self, keys):
        self.keys = keys
        self.polys = []
        self.lms = []
        self.lcs = []

    def append(self, p):
        lm = _lead(p, self.keys)
        self.polys.append(p)
        self.lms.append(lm)
        self.lcs.append(p[lm])

    def __len__(self):
        return len(self.polys)


def _normal_form(p, basis: _Basis, keys, skip=None, top=False):
    """Full reduction of p by basis (only the leading term with ``top``).

    Returns ``(r, mult)`` with ``mult * p - r`` in the span of the basis and
    no term of r divisible by a basis leading monomial.  The reducer for each
    step is the first basis element (in list order) whose leading monomial
    divides the current greatest unreduced term.
    """
    p = dict(p)
    r: dict = {}
    mult = Fraction(1)
    steps = 0
    polys, lms, lcs = basis.polys, basis.lms, basis.lcs
    while p:
        lm = _lead(p, keys)
        c = p[lm]
        for idx, g_lm in enumerate(lms):
            if idx == skip or not _divides(g_lm, lm):
                continue
            a = lcs[idx]
            h = gcd(a, c)
            fa, fb = a // h, c // h
            if fa != 1:
                for e in p:
                    p[e] *= fa
                for e in r:
                    r[e] *= fa
                mult *= fa
            q = tuple(x - y for x, y in zip(lm, g_lm))
            for e, v in polys[idx].items():
                e2 = tuple(x + y for x, y in zip(e, q))
                s = p.get(e2, 0) - fb * v
                if s:
                    p[e2] = s
                else:
                    del p[e2]
            steps += 1
            if steps % 16 == 0:
                h = _content(p, r)
                if h > 1:
                    p = {e: v // h for e, v in p.items()}
                    r = {e: v // h for e, v in r.items()}
                    mult /= h
            break
        else:
            if top:
                r.update(p)
                break
            r[lm] = c
            del p[lm]
    h = _content(r)
    if h > 1:
        r = {e: v // h for e, v in r.items()}
        mult /= h
    return r, mult


def _spoly(f, g, keys):
    lf, lg = _lead(f, keys), _lead(g, keys)
    l = tuple(max(x, y) for x, y in zip(lf, lg))
    cf, cg = f[lf], g[lg]
    h = gcd(cf, cg)
    af, ag = cg // h, cf // h
    qf = tuple(x - y for x, y in zip(l, lf))
    qg = tuple(x - y for x, y in zip(l, lg))
    out: dict = {}
    for e, v in f.items():
        out[tuple(x + y for x, y in zip(e, qf))] = af * v
    for e, v in g.items():
        e2 = tuple(x + y for x, y in zip(e, qg))
        s = out.get(e2, 0) - ag * v
        if s:
            out[e2] = s
        else:
            out.pop(e2, None)
    return out


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _gm_update(active, pairs, new, lms):
    """Gebauer-Moeller update after appending basis element ``new``.

    ``active`` lists indices of the current basis, ``pairs`` is a set of
    index pairs.  Returns the new (active, pairs).
    """
    mh = lms[new]
    cands = sorted(active)
    keep = []
    for pos, g in enumerate(cands):
        l = _lcm(mh, lms[g])
        if _coprime(mh, lms[g]):
            keep.append(g)
            continue
        # drop (new, g) if a different pair (new, p) has an lcm dividing l;
        # among equal lcms keep the first kept one
        dominated = False
        for p in cands[pos + 1:]:
            if _divides(_lcm(mh, lms[p]), l):
                dominated = True
                break
        if not dominated:
            for p in keep:
                if _divides(_lcm(mh, lms[p]), l):
                    dominated = True
                    break
        if not dominated:
            keep.append(g)
    fresh = {(g, new) for g in keep if not _coprime(mh, lms[g])}
    old = set()
    for (a, b) in pairs:
        l = _lcm(lms[a], lms[b])
        if not _divides(mh, l) or _lcm(lms[a], mh) == l or _lcm(lms[b], mh) == l:
            old.add((a, b))
    active = [g for g in active if not _divides(mh, lms[g])] + [new]
    return active, old | fresh


def _int_buchberger(gens, keys, chain=True, top=True):
    """Buchberger's algorithm on integer dicts; returns a _Basis whose
    ``active`` attribute lists the indices forming a Groebner basis."""
    basis = _Basis(keys)
    heap = []
    queued = set()
    gens = [_bigdict(p) for p in gens]

    def pair_key(i, j):
        l = _lcm(basis.lms[i], basis.lms[j])
        return (sum(l), keys[l], i, j)

    def reducer():
        if not chain:
            return basis
        sub = _Basis(keys)
        for i in active:
            sub.polys.append(basis.polys[i])
            sub.lms.append(basis.lms[i])
            sub.lcs.append(basis.lcs[i])
        return sub

    active: list = []
    pairs: set = set()

    def insert(p):
        nonlocal active, pairs
        basis.append(_primitive(p, keys))
        new = len(basis) - 1
        if chain:
            active, pairs = _gm_update(active, pairs, new, basis.lms)
        else:
            pairs |= {(g, new) for g in active if not _coprime(basis.lms[g], basis.lms[new])}
            active = active + [new]
        for pr in pairs - queued:
            heapq.heappush(heap, pair_key(*pr))
            queued.add(pr)

    gens = sorted((p for p in gens if p), key=lambda p: keys[_lead(p, keys)])
    for p in gens:
        # bring each input generator to normal form first; keeps pairs few
        r, _ = _normal_form(p, reducer(), keys, top=top)
        if r:
            insert(r)
    while heap:
        _, _, i, j = heapq.heappop(heap)
        queued.discard((i, j))
        if (i, j) not in pairs:
            continue
        pairs.discard((i, j))
        # top-reduction suffices: a pair is settled once its S-polynomial has a
        # standard representation, and tails are cleaned up by _autoreduce
        r, _ = _normal_form(_spoly(basis.polys[i], basis.polys[j], keys), reducer(), keys, top=top)
        if r:
            insert(r)
    basis.active = active
    return basis


def _autoreduce(polys, keys, is_groebner=False):
    """Interreduce integer polynomials into a reduced list, sorted descending.

    With ``is_groebner`` the input is trusted to be a Groebner basis and
    elements with a redundant leading monomial are dropped up front.
    """
    polys = [_primitive(p, keys) for p in polys if p]
    if is_groebner:
        lms = [_lead(p, keys) for p in polys]
        ranked = sorted(range(len(polys)), key=lambda t: keys[lms[t]])
        kept = []
        for t in ranked:
            if not any(_divides(lms[s], lms[t]) for s in kept):
                kept.append(t)
        polys = [polys[t] for t in sorted(kept)]
    changed = True
    while changed:
        changed = False
        idx = 0
        while idx < len(polys):
            others = _Basis(keys)
            for s, q in enumerate(polys):
                if s != idx:
                    others.append(q)
            r = _primitive(_normal_form(polys[idx], others, keys)[0], keys)
            if r != polys[idx]:
                changed = True
                if r:
                    polys[idx] = r
                else:
                    del polys[idx]
                    continue
            idx += 1
    polys.sort(key=lambda p: keys[_lead(p, keys)], reverse=True)
    return polys


def _to_monic(p: dict, ring: Ring, keys) -> Polynomial:
    lc = int(p[_lead(p, keys)])
    return Polynomial._raw(ring, {e: Fraction(int(v), lc) for e, v in p.items()})


def _to_int(f: Polynomial) -> dict:
    return primitive_int_dict(f._coeffs)


# -- public operations ---------------------------------------------------------


def reduce(f: Polynomial, basis: Sequence[Polynomial], order: OrderSpec) -> Polynomial:
    """Remainder of f on division by basis (greatest reducible term first)."""
    if f.is_zero():
        return f
    for g in basis:
        if g.is_zero():
            raise ZeroPolynomialError("cannot divide by the zero polynomial")
    keys = KeyCache(order)
    # clear denominators of f, remembering the factor
    den = 1
    for c in f._coeffs.values():
        den = den * c.denominator // gcd(den, c.denominator)
    p = {e: _big(int(c * den)) for e, c in f._coeffs.items()}
    b = _Basis(keys)
    for g in basis:
        # keep raw integer multiples; the sign of lc is irrelevant to division
        b.append(_bigdict(primitive_int_dict(g._coeffs)))
    r, mult = _normal_form(p, b, keys)
    scale = Fraction(int(mult.numerator), int(mult.denominator)) * den
    return Polynomial._raw(f.ring, {e: Fraction(int(v)) / scale for e, v in r.items()})


def s_poly(f: Polynomial, g: Polynomial, order: OrderSpec) -> Polynomial:
    """(L/LT(f)) f - (L/LT(g)) g for L the lcm of the leading monomials."""
    tf, tg = leading_term(order, f), leading_term(order, g)
    l = tf.monomial.lcm(tg.monomial)
    return f.shift(l / tf.monomial, 1 / tf.coeff) - g.shift(l / tg.monomial, 1 / tg.coeff)


def buchberger(ideal: Ideal, order: OrderSpec, chain: bool = True) -> GroebnerBasis:
    """A (non-reduced) Groebner basis, elements primitive over ZZ.

    Pairs are processed by the normal strategy: ascending lcm degree, then
    ascending lcm under ``order``.  The coprime-leading-monomial criterion is
    always on; Buchberger's chain criterion is controlled by ``chain``.
    """
    keys = KeyCache(order)
    basis = _int_buchberger([_to_int(f) for f in ideal.generators], keys, chain)
    ring = ideal.ring
    elems = tuple(Polynomial._raw(ring, {e: Fraction(int(v)) for e, v in basis.polys[i].items()})
                  for i in basis.active)
    return GroebnerBasis(order, elems, reduced=False)


def reduce_gb(gb: GroebnerBasis) -> GroebnerBasis:
    """Reduced basis: monic, interreduced, sorted descending by leading monomial."""
    keys = KeyCache(gb.order)
    ring = gb.ring
    polys = _autoreduce([_bigdict(_to_int(f)) for f in gb.elements if f], keys)
    return GroebnerBasis(gb.order, tuple(_to_monic(p, ring, keys) for p in polys), reduced=True)


def reduced_groebner(ideal: Ideal, order: OrderSpec, chain: bool = True) -> GroebnerBasis:
    keys = KeyCache(order)
    basis = _int_buchberger([_to_int(f) for f in ideal.generators], keys, chain)
    polys = _autoreduce([basis.polys[i] for i in basis.active], keys, is_groebner=True)
    return GroebnerBasis(order, tuple(_to_monic(p, ideal.ring, keys) for p in polys), reduced=True)


def leading_monomials_of_ideal(ring: Ring, gens: list[dict], order: OrderSpec,
                               chain: bool = True) -> list[Monomial]:
    """Minimal generators of the initial ideal of integer generator dicts."""
    keys = KeyCache(order)
    basis = _int_buchberger(gens, keys, chain)
    polys = _autoreduce([basis.polys[i] for i in basis.active], keys, is_groebner=True)
    return [Monomial(_lead(p, keys)) for p in polys]


def initial_ideal(ideal: Ideal, order: OrderSpec, chain: bool = True):
    from .monideal import MonomialIdeal

    gb = reduced_groebner(ideal, order, chain)
    return MonomialIdeal(ideal.ring, gb.leading_monomials())


def dim_in_degree(ideal: Ideal, d: int) -> int:
    """dim_K I_d as an exact rank of the degree-d multiples of the generators."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    n = ideal.ring.n
    columns = {e: i for i, e in enumerate(exponent_tuples(n, d))}
    ech = SparseEchelon()
    for f in ideal.generators:
        df = f.degree()
        if df > d:
            continue
        coeffs = primitive_int_dict(f._coeffs)
        for m in exponent_tuples(n, d - df):
            row = {columns[tuple(a + b for a, b in zip(e, m))]: v for e, v in coeffs.items()}
            ech.add(row)
            if ech.rank == len(columns):
                return ech.rank
    return ech.rank


def membership(f: Polynomial, gb: GroebnerBasis) -> bool:
    return reduce(f, gb.elements, gb.order).is_zero()
