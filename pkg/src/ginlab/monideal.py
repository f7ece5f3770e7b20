"""Monomial ideals: minimal generators, Borel moves, segments, regularity."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .errors import DimensionMismatch, NotBorelFixedError
from .linalg import rank
from .monomial import Monomial, exponent_tuples
from .orders import OrderSpec
from .ring import Ring


def _canonical(gens):
    # ascending degree, lex-descending inside a degree
    return sorted(gens, key=lambda m: (m.degree, tuple(-e for e in m.exponents)))


def _minimalize(monos) -> list[Monomial]:
    out: list[Monomial] = []
    for m in sorted(set(monos), key=lambda m: m.degree):
        if not any(g.divides(m) for g in out):
            out.append(m)
    return _canonical(out)


class MonomialIdeal:
    """A monomial ideal held by its (unique) minimal generators."""

    __slots__ = ("ring", "gens")

    def __init__(self, ring: Ring, monomials: Iterable):
        monos = []
        for m in monomials:
            if not isinstance(m, Monomial):
                m = Monomial(tuple(m))
            if m.n != ring.n:
                raise DimensionMismatch(f"monomial {m.exponents} does not fit {ring}")
            monos.append(m)
        if not monos:
            raise ValueError("a monomial ideal needs at least one generator")
        self.ring = ring
        self.gens = tuple(_minimalize(monos))

    @property
    def min_gens(self) -> tuple[Monomial, ...]:
        return self.gens

    def __contains__(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def contains_exps(self, e: tuple) -> bool:
        return any(all(a <= b for a, b in zip(g.exponents, e)) for g in self.gens)

    def is_proper(self) -> bool:
        return all(g.degree > 0 for g in self.gens)

    def degrees(self) -> list[int]:
        return sorted({g.degree for g in self.gens})

    def max_degree(self) -> int:
        return max(g.degree for g in self.gens)

    def generators_in_degree(self, d: int) -> list[Monomial]:
        return [g for g in self.gens if g.degree == d]

    def lcm(self) -> Monomial:
        out = self.gens[0]
        for g in self.gens[1:]:
            out = out.lcm(g)
        return out

    def monomials_in_degree(self, d: int) -> list[Monomial]:
        return [Monomial(e) for e in exponent_tuples(self.ring.n, d) if self.contains_exps(e)]

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring.n == other.ring.n and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def format(self) -> str:
        return "(" + ", ".join(g.format(self.ring.var_names) for g in self.gens) + ")"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MonomialIdeal{self.format()}"


def minimal_generators(monomials: Iterable, ring: Ring = None) -> MonomialIdeal:
    monos = [m if isinstance(m, Monomial) else Monomial(tuple(m)) for m in monomials]
    if not monos:
        raise ValueError("need at least one monomial")
    return MonomialIdeal(ring or Ring.of(monos[0].n), monos)


def is_borel_fixed(J: MonomialIdeal) -> bool:
    # exchange moves commute with multiplication, so minimal generators suffice
    for m in J.gens:
        for j, e in enumerate(m.exponents):
            if not e:
                continue
            for i in range(j):
                if m.exchange(i, j) not in J:
                    return False
    return True


def borel_leq(a: Monomial, b: Monomial) -> bool:
    """True if b is reachable from a by exchanges x_j -> x_i with i < j."""
    if a.n != b.n:
        raise DimensionMismatch("monomials in different rings")
    if a.degree != b.degree:
        raise ValueError("Borel order only compares monomials of equal degree")
    sa = sb = 0
    for x, y in zip(a.exponents, b.exponents):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def is_segment(B: Iterable[Monomial], order: OrderSpec) -> bool:
    """Per degree: everything above the stratum's minimum belongs to B."""
    B = set(B)
    if not B:
        return True
    n = next(iter(B)).n
    strata: dict = {}
    for m in B:
        strata.setdefault(m.degree, set()).add(m.exponents)
    for d, stratum in strata.items():
        lowest = order.key(min(stratum, key=order.key))
        for e in exponent_tuples(n, d):
            if order.key(e) > lowest and e not in stratum:
                return False
    return True


def is_segment_ideal(J: MonomialIdeal, order: OrderSpec) -> bool:
    """Whether J is generated by an order-segment.

    A segment generating J must contain every minimal generator, hence in each
    generator degree everything above the lowest one; conversely those upward
    closures form a generating segment whenever they lie inside J.
    """
    n = J.ring.n
    for d in J.degrees():
        lowest = order.key(min((g.exponents for g in J.generators_in_degree(d)), key=order.key))
        for e in exponent_tuples(n, d):
            if order.key(e) >= lowest and not J.contains_exps(e):
                return False
    return True


def hilbert_count(J: MonomialIdeal, d: int) -> int:
    """Number of degree-d monomials in J."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return sum(1 for e in exponent_tuples(J.ring.n, d) if J.contains_exps(e))


def regularity_borel(J: MonomialIdeal) -> int:
    """Regularity of a Borel-fixed ideal: its largest generator degree."""
    if not is_borel_fixed(J):
        raise NotBorelFixedError(f"{J} is not Borel-fixed")
    return J.max_degree()


# -- Betti numbers ---------------------------------------------------------------


@dataclass
class BettiTable:
    """Graded Betti numbers beta_{i,j}(S/J), zeros omitted."""

    entries: dict = field(default_factory=dict)
    truncation: int = 0

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def triples(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, v) for (i, j), v in self.entries.items())

    def max_shift(self) -> int:
        """max{j - i : beta_{i,j} != 0} (the regularity of S/J)."""
        return max(j - i for (i, j) in self.entries)

    def projective_dimension(self) -> int:
        return max(i for (i, _) in self.entries)

    def format(self) -> str:
        if not self.entries:
            return "(empty)"
        imax = self.projective_dimension()
        rmax = self.max_shift()
        width = max(len(str(v)) for v in self.entries.values()) + 1
        head = "     " + "".join(str(i).rjust(width) for i in range(imax + 1))
        lines = [head]
        for r in range(rmax + 1):
            cells = []
            for i in range(imax + 1):
                v = self[(i, i + r)]
                cells.append((str(v) if v else "-").rjust(width))
            lines.append(f"{r:>3}: " + "".join(cells))
        return "\n".join(lines)


def _lcm_lattice(gens) -> set:
    lattice = {(0,) * len(gens[0])}
    for g in gens:
        lattice |= {tuple(max(a, b) for a, b in zip(g, x)) for x in lattice}
    return lattice


def _koszul_betti(J: MonomialIdeal, alpha) -> dict:
    """beta_{i,alpha}(S/J) from the multidegree-alpha strand of the Koszul complex
    K(x_1..x_n) tensor S/J: cells are sets F of variables with alpha - 1_F outside J."""
    support = [k for k, a in enumerate(alpha) if a]

    def alive(F):
        e = list(alpha)
        for k in F:
            e[k] -= 1
        return not J.contains_exps(tuple(e))

    cells = {}
    for i in range(len(support) + 1):
        cells[i] = [F for F in combinations(support, i) if alive(F)]
    index = {i: {F: t for t, F in enumerate(cs)} for i, cs in cells.items()}
    ranks = {}
    for i in range(1, len(support) + 1):
        rows = []
        target = index[i - 1]
        for F in cells[i]:
            row = {}
            for t, k in enumerate(F):
                face = F[:t] + F[t + 1:]
                col = target.get(face)
                if col is not None:
                    row[col] = -1 if t % 2 else 1
            rows.append(row)
        ranks[i] = rank(rows) if rows and target else 0
    out = {}
    for i, cs in cells.items():
        h = len(cs) - ranks.get(i, 0) - ranks.get(i + 1, 0)
        if h:
            out[i] = h
    return out


def betti_table(J: MonomialIdeal) -> BettiTable:
    """Graded Betti numbers of S/J via multigraded Koszul homology.

    Only multidegrees in the lcm lattice of the generators can carry Betti
    numbers (they are the shifts of the Taylor resolution), so every internal
    degree up to deg(lcm) + n is covered.
    """
    if not J.is_proper():
        raise ValueError("the unit ideal has no Betti table")
    table: dict = {}
    for alpha in _lcm_lattice([g.exponents for g in J.gens]):
        j = sum(alpha)
        for i, v in _koszul_betti(J, alpha).items():
            table[(i, j)] = table.get((i, j), 0) + v
    return BettiTable(table, J.lcm().degree + J.ring.n)


def regularity_monomial(J: MonomialIdeal) -> int:
    """reg(J) = reg(S/J) + 1, read off the Betti table."""
    return betti_table(J).max_shift() + 1
