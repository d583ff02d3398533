"""Symbolic summand sets and the set-specification mini-language.

A part set ``S`` describes which summands a composition may use.  Five
shapes are supported::

    {3,5}        Explicit      the listed values
    2..6, 2..    Range         an interval, possibly unbounded above
    mod(1,2)     Residue       {a >= 1 : a = r (mod m)}
    not{2}       ComplementSet [1:n] minus the listed values
    not(2..4)    ComplementRange [1:n] minus an interval

Complements are relative to ``[1:n]`` where ``n`` is the integer being
composed, so they only become concrete when materialized.  Every set is
immutable; ``str()`` gives the canonical specification text, and parsing
that text yields an equal object.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SetSyntaxError

__all__ = [
    "PartSet",
    "Explicit",
    "Range",
    "Residue",
    "ComplementSet",
    "ComplementRange",
    "parse_set",
    "materialize",
    "contains",
]


def _check_increasing(values: tuple[int, ...], what: str) -> None:
    if not values:
        raise ValueError(f"{what} must be non-empty")
    if values[0] < 1:
        raise ValueError(f"{what} must contain positive integers only")
    for prev, cur in zip(values, values[1:]):
        if cur <= prev:
            raise ValueError(f"{what} must be strictly increasing")


class PartSet:
    """Base class of the five set shapes."""

    def contains(self, a: int, n: int) -> bool:
        raise NotImplementedError

    def materialize(self, n: int) -> tuple[int, ...]:
        """Return ``S ∩ [1:n]`` as a strictly increasing tuple."""
        return tuple(a for a in range(1, n + 1) if self.contains(a, n))

    def finite_values(self) -> tuple[int, ...] | None:
        """The whole set when it is finite and independent of n, else None."""
        return None

    def is_finite(self) -> bool:
        """True unless the set is an infinite progression (unbounded range, residue)."""
        return True


@dataclass(frozen=True)
class Explicit(PartSet):
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        _check_increasing(self.values, "explicit set")

    def contains(self, a, n):
        return a <= n and a in self.values

    def materialize(self, n):
        return tuple(v for v in self.values if v <= n)

    def finite_values(self):
        return self.values

    def __str__(self):
        return "{" + ",".join(map(str, self.values)) + "}"


@dataclass(frozen=True)
class Range(PartSet):
    lo: int
    hi: int | None = None

    def __post_init__(self):
        if self.lo < 1:
            raise ValueError("range lower bound must be >= 1")
        if self.hi is not None and self.hi < self.lo:
            raise ValueError("range upper bound must be >= lower bound")

    def contains(self, a, n):
        hi = n if self.hi is None else min(n, self.hi)
        return self.lo <= a <= hi

    def materialize(self, n):
        hi = n if self.hi is None else min(n, self.hi)
        return tuple(range(self.lo, hi + 1))

    def finite_values(self):
        return None if self.hi is None else tuple(range(self.lo, self.hi + 1))

    def is_finite(self):
        return self.hi is not None

    def __str__(self):
        return f"{self.lo}..{'' if self.hi is None else self.hi}"


@dataclass(frozen=True)
class Residue(PartSet):
    r: int
    m: int

    def __post_init__(self):
        if not 1 <= self.r <= self.m:
            raise ValueError("residue class needs 1 <= r <= m")

    def contains(self, a, n):
        return 1 <= a <= n and (a - self.r) % self.m == 0

    def materialize(self, n):
        return tuple(range(self.r, n + 1, self.m))

    def is_finite(self):
        return False

    def __str__(self):
        return f"mod({self.r},{self.m})"


@dataclass(frozen=True)
class ComplementSet(PartSet):
    excluded: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "excluded", tuple(int(v) for v in self.excluded))
        _check_increasing(self.excluded, "excluded set")

    def contains(self, a, n):
        return 1 <= a <= n and a not in self.excluded

    def __str__(self):
        return "not{" + ",".join(map(str, self.excluded)) + "}"


@dataclass(frozen=True)
class ComplementRange(PartSet):
    m1: int
    m2: int

    def __post_init__(self):
        if not 1 <= self.m1 <= self.m2:
            raise ValueError("excluded range needs 1 <= m1 <= m2")

    def contains(self, a, n):
        return 1 <= a <= n and not self.m1 <= a <= self.m2

    def __str__(self):
        return f"not({self.m1}..{self.m2})"


def materialize(s: PartSet, n: int) -> tuple[int, ...]:
    """Return the part vector of ``S ∩ [1:n]`` (empty tuple when empty)."""
    return s.materialize(n)


def contains(s: PartSet, a: int, n: int) -> bool:
    """Return True iff ``a`` belongs to ``S ∩ [1:n]``."""
    return s.contains(a, n)


class _Parser:
    """Recursive-descent parser over the set-specification grammar::

        spec     := explicit | range | residue | complement
        explicit := '{' intlist '}'
        range    := INT '..' [INT]
        residue  := 'mod' '(' INT ',' INT ')'
        complement := 'not' ( explicit | '(' INT '..' INT ')' )
        intlist  := INT (',' INT)*

    Whitespace between tokens is ignored.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message):
        return SetSyntaxError(message, self.text, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token):
        self.skip_ws()
        return self.text.startswith(token, self.pos)

    def expect(self, token):
        if not self.peek(token):
            raise self.error(f"expected {token!r}")
        self.pos += len(token)

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected integer")
        return int(self.text[start:self.pos])

    def intlist(self):
        self.expect("{")
        values = [self.integer()]
        while self.peek(","):
            self.pos += 1
            values.append(self.integer())
        self.expect("}")
        return tuple(values)

    def spec(self) -> PartSet:
        if self.peek("{"):
            result = self.build(Explicit, self.intlist())
        elif self.peek("mod"):
            self.pos += 3
            self.expect("(")
            r = self.integer()
            self.expect(",")
            m = self.integer()
            self.expect(")")
            result = self.build(Residue, r, m)
        elif self.peek("not"):
            self.pos += 3
            if self.peek("{"):
                result = self.build(ComplementSet, self.intlist())
            else:
                self.expect("(")
                m1 = self.integer()
                self.expect("..")
                m2 = self.integer()
                self.expect(")")
                result = self.build(ComplementRange, m1, m2)
        else:
            lo = self.integer()
            self.expect("..")
            self.skip_ws()
            hi = None
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                hi = self.integer()
            result = self.build(Range, lo, hi)
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")
        return result

    def build(self, cls, *args):
        try:
            return cls(*args)
        except ValueError as exc:
            raise SetSyntaxError(str(exc), self.text) from None


def parse_set(spec: str) -> PartSet:
    """Parse a set specification such as ``{3,5}``, ``1..``, ``mod(1,2)``.

    Raises :class:`SetSyntaxError` with a character position for malformed
    input, and without one for well-formed but invalid sets (``mod(3,2)``,
    ``{5,3}``).
    """
    return _Parser(spec).spec()
