"""Monomials as exponent vectors."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import NamedTuple, Optional

from .errors import DimensionMismatch, NotDivisibleError

MAX_DEGREE = 10**6


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        exps = tuple(self.exponents)
        for e in exps:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be nonnegative integers, got {exps}")
        deg = sum(exps)
        if deg > MAX_DEGREE:
            raise OverflowError(f"total degree {deg} exceeds {MAX_DEGREE}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", deg)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int, power: int = 1) -> Monomial:
        """x_{i+1}^power (``i`` is 0-based)."""
        exps = [0] * n
        exps[i] = power
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def _check(self, other: Monomial):
        if len(self.exponents) != len(other.exponents):
            raise DimensionMismatch(
                f"monomials in {len(self.exponents)} and {len(other.exponents)} variables"
            )

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: Monomial) -> bool:
        """True if self | other."""
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise NotDivisibleError(f"{other.exponents} does not divide {self.exponents}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def exchange(self, i: int, j: int) -> Optional[Monomial]:
        """The Borel move m * x_i / x_j (0-based), or None if x_j does not divide m."""
        if self.exponents[j] == 0:
            return None
        exps = list(self.exponents)
        exps[j] -= 1
        exps[i] += 1
        return Monomial(tuple(exps))

    def format(self, names) -> str:
        parts = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class MonomialArith(NamedTuple):
    product: Monomial
    lcm: Monomial
    divides: bool
    quotient: Optional[Monomial]


def monomial_arith(a: Monomial, b: Monomial) -> MonomialArith:
    """Product, lcm, whether b | a, and a / b when it exists."""
    divides = b.divides(a)
    return MonomialArith(a * b, a.lcm(b), divides, a / b if divides else None)


def exponent_tuples(n: int, d: int):
    """All exponent vectors of degree d in n variables, lex-descending."""
    for combo in combinations_with_replacement(range(n), d):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        yield tuple(exps)


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    return [Monomial(e) for e in exponent_tuples(n, d)]
