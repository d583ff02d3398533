"""Recurrences whose solution is the composition count R(S, n).

The *first* recurrence sums over every usable part:
``R(n) = sum_{s in S, s <= n} R(n - s)``.

The *second* one groups parts into runs of consecutive integers.  A
composition either starts with a part that can be obtained by bumping the
first part of a composition of ``n - 1``, or with a part that starts a run
of S.  That gives, for ``n > 1``::

    R(n) = R(n-1) - sum_{s-1 in S, s not in S} R(n-s)
                  + sum_{s in S, s-1 not in S} R(n-s)

so its length depends on the number of runs rather than on ``|S|``.
``choose`` picks whichever recurrence has fewer terms.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Literal

from .errors import UnsupportedInputError
from .lhrc import Lhrc
from .oracle import count_brute
from .partset import PartSet, Residue


@dataclass(frozen=True)
class InterpreterChoice:
    which: Literal["first", "second"]
    t1: int
    t2: int | Literal["unbounded"]
    rec: Lhrc


def first_interpreter(s: PartSet, n: int) -> Lhrc:
    """One unit coefficient per part of ``S ∩ [1:n]``.

    Initial values: ``R(0) = 1``, zero below the smallest part, one at the
    smallest part, and the recurrence itself for the remaining slots.
    """
    parts = s.materialize(n)
    if not parts:
        raise UnsupportedInputError(f"{s} has no parts up to {n}")
    initial = [1] + [0] * (parts[-1] - 1)
    for m in range(parts[0], parts[-1]):
        initial[m] = sum(initial[m - p] for p in parts if p <= m)
    return Lhrc(parts, (1,) * len(parts), tuple(initial))


def second_interpreter_terms(s: PartSet, n: int) -> list[tuple[int, int]]:
    """Raw ``(offset, coefficient)`` terms of the run-based recurrence, unmerged.

    Terms whose offset exceeds ``n`` are left out; they would only read
    ``R`` at a negative argument, which is zero.
    """
    if isinstance(s, Residue):
        raise UnsupportedInputError(
            f"{s}: the run-based recurrence grows with n; use the residue reduction"
        )
    terms = [(1, 1)]
    for o in range(1, n + 1):
        if s.contains(o - 1, n) and not s.contains(o, n):
            terms.append((o, -1))
        elif s.contains(o, n) and not s.contains(o - 1, n):
            terms.append((o, 1))
    return terms


def second_interpreter(s: PartSet, n: int) -> Lhrc:
    """Merge the run-based terms by offset and seed them from the oracle.

    The recurrence only holds for ``n > 1``, so a result whose largest
    offset is 1 (every integer up to ``n`` is a part) cannot be seeded
    correctly and is rejected.
    """
    merged = Counter()
    for offset, coeff in second_interpreter_terms(s, n):
        merged[offset] += coeff
    offsets = tuple(sorted(o for o, k in merged.items() if k))
    if offsets[-1] < 2:
        raise UnsupportedInputError(
            f"{s} up to {n}: the run-based recurrence would have to hold at n = 1"
        )
    coeffs = tuple(merged[o] for o in offsets)
    initial = tuple(count_brute(s, i) for i in range(offsets[-1]))
    return Lhrc(offsets, coeffs, initial)


def t2_terms(s: PartSet, n: int) -> int | Literal["unbounded"]:
    """Size of the set of offsets appearing in the run-based recurrence."""
    try:
        return len({o for o, _ in second_interpreter_terms(s, n)})
    except UnsupportedInputError:
        return "unbounded"


def choose(s: PartSet, n: int) -> InterpreterChoice:
    """Pick the recurrence with fewer terms; ties and unsupported cases go first."""
    t1 = len(s.materialize(n))
    t2 = t2_terms(s, n)
    if t2 != "unbounded" and t2 < t1:
        try:
            return InterpreterChoice("second", t1, t2, second_interpreter(s, n))
        except UnsupportedInputError:
            pass
    return InterpreterChoice("first", t1, t2, first_interpreter(s, n))
