"""Text grammars for polynomials, ideals, monomials and orders.

Polynomials: terms joined by ``+``/``-``; a term is a product of factors
joined by ``*`` where a factor is a rational ``p`` or ``p/q`` or a variable
with optional ``^exp``, e.g. ``x^2*y + 3/2*x*y^2``.  Whitespace is ignored.

Orders: ``lex`` | ``rlex`` | ``weight:w1,...,wn;tie=lex|rlex``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .groebner import Ideal
from .monomial import Monomial
from .orders import LEX, RLEX, OrderSpec, weight
from .polynomial import Polynomial
from .ring import Ring

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()−]))")


def _tokenize(text: str):
    pos = 0
    out = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = m.lastgroup
        val = m.group(kind)
        if val == "−":
            val = "-"
        out.append((kind, val, m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _PolyParser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty polynomial")
        coeffs: dict = {}
        sign = 1
        tok = self.peek()
        if tok[1] in "+-" and tok[0] == "op":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        while True:
            c, exps = self.term()
            coeffs[exps] = coeffs.get(exps, 0) + sign * c
            tok = self.peek()
            if tok[0] == "end":
                break
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                sign = -1 if tok[1] == "-" else 1
                continue
            self.fail(f"expected '+', '-' or end of input, got {tok[1]!r}")
        return Polynomial(self.ring, coeffs)

    def term(self):
        exps = [0] * self.ring.n
        c = self.factor(exps)
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                c *= self.factor(exps)
            elif tok[0] in ("name", "num"):
                # juxtaposition such as 3x or x y
                c *= self.factor(exps)
            else:
                return c, tuple(exps)

    def factor(self, exps) -> Fraction:
        """Consume one factor; variables bump ``exps``, numbers are returned."""
        tok = self.take()
        if tok[0] == "num":
            if self.peek()[0] == "op" and self.peek()[1] == "/":
                self.take()
                den = self.take()
                if den[0] != "num":
                    self.fail("expected denominator", den)
                if int(den[1]) == 0:
                    self.fail("zero denominator", den)
                return Fraction(int(tok[1]), int(den[1]))
            return Fraction(int(tok[1]))
        if tok[0] == "name":
            try:
                idx = self.ring.index(tok[1])
            except ValueError:
                self.fail(f"unknown variable {tok[1]!r} (ring has {', '.join(self.ring.var_names)})", tok)
            power = 1
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                self.take()
                e = self.take()
                if e[0] != "num":
                    self.fail("expected exponent", e)
                power = int(e[1])
            exps[idx] += power
            return Fraction(1)
        what = repr(tok[1]) if tok[1] else "end of input"
        self.fail(f"expected a coefficient or variable, got {what}", tok)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    return _PolyParser(text, ring).parse()


def _split_top(text: str):
    """Split on commas; returns (piece, offset) pairs."""
    out, start = [], 0
    for i, ch in enumerate(text):
        if ch == ",":
            out.append((text[start:i], start))
            start = i + 1
    out.append((text[start:], start))
    return out


def _strip_parens(text: str):
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        off = text.index("(") + 1
        return text[off:text.rindex(")")], off
    return text, 0


def parse_polynomials(text: str, ring: Ring) -> list[Polynomial]:
    body, base = _strip_parens(text)
    polys = []
    for piece, off in _split_top(body):
        try:
            polys.append(parse_polynomial(piece, ring))
        except ParseError as exc:
            pos = None if exc.position is None else exc.position + off + base
            msg = str(exc).rsplit(" at position", 1)[0]
            raise ParseError(msg, text, pos) from None
    return polys


def parse_ideal(text: str, ring: Ring) -> Ideal:
    """Comma-separated homogeneous generators (optionally in parentheses)."""
    return Ideal(ring, tuple(parse_polynomials(text, ring)))


def parse_monomial(text: str, ring: Ring) -> Monomial:
    f = parse_polynomial(text, ring)
    terms = f.terms
    if len(terms) != 1 or terms[0].coeff != 1:
        raise ParseError(f"{text!r} is not a monomial", text)
    return terms[0].monomial


def parse_monomials(text: str, ring: Ring) -> list[Monomial]:
    out = []
    for f in parse_polynomials(text, ring):
        terms = f.terms
        if len(terms) != 1 or terms[0].coeff != 1:
            raise ParseError(f"{f} is not a monomial", text)
        out.append(terms[0].monomial)
    return out


_WEIGHT = re.compile(r"weight:(?P<w>[^;]+);tie=(?P<tie>lex|rlex)\Z")


def parse_order(text: str) -> OrderSpec:
    s = re.sub(r"\s+", "", text)
    if s == "lex":
        return LEX
    if s == "rlex":
        return RLEX
    m = _WEIGHT.match(s)
    if not m:
        raise ParseError(f"invalid order {text!r}; expected lex, rlex or weight:w1,...,wn;tie=lex|rlex",
                         text)
    try:
        ws = [int(w) for w in m.group("w").split(",")]
        return weight(ws, LEX if m.group("tie") == "lex" else RLEX)
    except ValueError as exc:
        raise ParseError(f"invalid weight vector in {text!r}: {exc}", text) from None
