"""Polynomial rings K[x1, ..., xn] over the rationals."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class Ring:
    """Variable names of K[x1, ..., xn]; the variable order is x1 > x2 > ... > xn."""

    var_names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")

    @property
    def n(self) -> int:
        return len(self.var_names)

    @classmethod
    def of(cls, n: int) -> Ring:
        """Ring with auto-generated names x1..xn."""
        if n < 1:
            raise ValueError("a ring needs at least one variable")
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    @classmethod
    def from_spec(cls, text: str) -> Ring:
        """Parse ``"x,y,z"`` or ``"n=6"``."""
        text = text.strip()
        m = re.fullmatch(r"n\s*=\s*(\d+)", text)
        if m:
            n = int(m.group(1))
            if n < 1:
                raise ParseError("ring size must be positive", text)
            return cls.of(n)
        names = [s.strip() for s in text.split(",")]
        try:
            return cls(tuple(names))
        except ValueError as exc:
            raise ParseError(f"bad ring spec {text!r}: {exc}", text) from None

    def index(self, name: str) -> int:
        return self.var_names.index(name)

    def __str__(self):
        return "QQ[" + ", ".join(self.var_names) + "]"
