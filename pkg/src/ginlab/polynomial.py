"""Exact multivariate polynomials over QQ.

A polynomial is stored as a mapping from exponent tuples to nonzero
``Fraction`` coefficients, independent of any monomial order; leading terms
are taken against an explicit :class:`OrderSpec` on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping, NamedTuple

from .errors import DimensionMismatch, ZeroPolynomialError
from .monomial import Monomial
from .orders import OrderSpec
from .ring import Ring


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    monomial: Monomial

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0:
            raise ValueError("a term has a nonzero coefficient")


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Polynomial:
    __slots__ = ("ring", "_coeffs", "_hash")

    def __init__(self, ring: Ring, coeffs: Mapping[tuple, object] = ()):
        self.ring = ring
        clean = {}
        for exps, c in dict(coeffs).items():
            if isinstance(exps, Monomial):
                exps = exps.exponents
            exps = tuple(exps)
            if len(exps) != ring.n:
                raise DimensionMismatch(f"exponent {exps} does not fit {ring}")
            c = Fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self._coeffs = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, coeffs: dict) -> Polynomial:
        """Wrap an already-canonical dict without copying or validation."""
        p = cls.__new__(cls)
        p.ring = ring
        p._coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def zero(cls, ring: Ring) -> Polynomial:
        return cls._raw(ring, {})

    @classmethod
    def constant(cls, ring: Ring, c) -> Polynomial:
        return cls(ring, {(0,) * ring.n: c})

    @classmethod
    def variable(cls, ring: Ring, i: int) -> Polynomial:
        return cls(ring, {Monomial.var(i, ring.n).exponents: 1})

    @classmethod
    def from_monomial(cls, ring: Ring, m: Monomial, c=1) -> Polynomial:
        return cls(ring, {m.exponents: c})

    @classmethod
    def from_terms(cls, ring: Ring, terms) -> Polynomial:
        coeffs: dict = {}
        for t in terms:
            coeffs[t.monomial.exponents] = coeffs.get(t.monomial.exponents, 0) + t.coeff
        return cls(ring, coeffs)

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> dict:
        """Exponent tuple -> coefficient (a copy)."""
        return dict(self._coeffs)

    @property
    def terms(self) -> list[Term]:
        """Terms in canonical (lex-descending) order."""
        return [Term(self._coeffs[e], Monomial(e)) for e in sorted(self._coeffs, reverse=True)]

    def monomials(self) -> list[Monomial]:
        return [Monomial(e) for e in sorted(self._coeffs, reverse=True)]

    def coefficient(self, m: Monomial) -> Fraction:
        return self._coeffs.get(m.exponents, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def degree(self) -> int:
        if not self._coeffs:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(sum(e) for e in self._coeffs)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._coeffs}) <= 1

    def leading_term(self, order: OrderSpec) -> Term:
        return leading_term(order, self)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Polynomial):
        if self.ring.n != other.ring.n:
            raise DimensionMismatch(f"{self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Polynomial:
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, {e: c * v for e, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Monomial):
            return self.shift(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        return Polynomial._raw(self.ring, mul_dicts(self._coeffs, other._coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, m: Monomial, c=1) -> Polynomial:
        """c * m * self."""
        mexp = m.exponents
        c = Fraction(c)
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(e, mexp)): c * v for e, v in self._coeffs.items()},
        )

    def monic(self, order: OrderSpec) -> Polynomial:
        return self.scale(1 / leading_term(order, self).coeff)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.n == other.ring.n and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    # -- printing -----------------------------------------------------------

    def format(self, order: OrderSpec = None) -> str:
        if not self._coeffs:
            return "0"
        if order is None:
            exps = sorted(self._coeffs, key=lambda e: (sum(e), e), reverse=True)
        else:
            exps = sorted(self._coeffs, key=order.key, reverse=True)
        out = []
        for idx, e in enumerate(exps):
            c = self._coeffs[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = Monomial(e).format(self.ring.var_names)
            if mono == "1":
                body = format_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_rational(a)}*{mono}"
            if idx == 0:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Polynomial({self.format()!r})"


def mul_dicts(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def leading_term(order: OrderSpec, f: Polynomial) -> Term:
    if not f._coeffs:
        raise ZeroPolynomialError("the zero polynomial has no leading term")
    e = max(f._coeffs, key=order.key)
    return Term(f._coeffs[e], Monomial(e))


class PolyArith(NamedTuple):
    sum: Polynomial
    product: Polynomial
    scalar_multiple: Polynomial


def poly_arith(f: Polynomial, g: Polynomial, scalar=1) -> PolyArith:
    return PolyArith(f + g, f * g, f.scale(scalar))


def primitive_int_dict(coeffs: Mapping) -> dict:
    """Scale a rational coefficient dict to coprime integers (sign kept)."""
    if not coeffs:
        return {}
    den = 1
    for c in coeffs.values():
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    ints = {e: int(Fraction(c) * den) for e, c in coeffs.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
        if g == 1:
            return ints
    return {e: v // g for e, v in ints.items()}
