"""Closed-form composition counts for classic families of part sets.

Each count is a short sum of resolvent kernels ``f_R``, where a kernel
enumerates the one-parameter solution family of a two-unknown equation
(plus an outer loop over a third unknown for three-term recurrences).
Below the order of the underlying recurrence the count is the recurrence's
seed value, itself given in closed form.  ``n = 0`` always counts the
empty composition.

Families::

    count_two_part(a1, a2, n)       parts in {a1, a2}
    count_residue(r, m, n)          parts = r (mod m)
    count_up_to_m(m, n)             parts <= m
    count_from_m(m, n)              parts >= m
    count_without_m(m, n)           no part equal to m
    count_without_range(m1, m2, n)  no part in [m1 : m2]
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Literal

from .diophantine import family_weight, triple_family_weight
from .errors import PreconditionError, UnsupportedInputError
from .partset import ComplementRange, ComplementSet, Explicit, PartSet, Range, Residue

Family = Literal["TwoPart", "Residue", "UpToM", "FromM", "WithoutM", "WithoutRange"]


@dataclass(frozen=True)
class FamilyCount:
    family: Family
    params: tuple[int, ...]
    n: int
    count: int


def count_two_part(a1: int, a2: int, n: int) -> int:
    """Compositions of ``n`` into the two parts ``a1 < a2``.

    The seeds of ``R(n) = R(n - a1) + R(n - a2)`` are ``R(i) = 1`` when
    ``a1`` divides ``i`` and 0 otherwise, for ``0 <= i < a2``.
    """
    if not 0 < a1 < a2:
        raise PreconditionError("count_two_part needs 0 < a1 < a2")
    if n < 0:
        return 0
    if n < a2:
        return 1 if n % a1 == 0 else 0

    def fr(q):
        return family_weight((1, 1), a1, a2, q - (a2 - a1))

    split = (a2 - a1 - 1) // a1
    return sum(fr(n - a1 * (h + 1)) for h in range(split + 1)) + sum(
        fr(n - a1 * (h + 1) + a2) for h in range(split + 1, (a2 - 1) // a1 + 1)
    )


def count_residue(r: int, m: int, n: int) -> int:
    """Compositions of ``n`` into parts congruent to ``r`` modulo ``m``.

    For ``n >= 1`` this equals the number of compositions of ``n - r`` into
    ``{r, m}``.  When ``r == m`` the two parts coincide but stay distinct
    (two colours of the part ``m``), giving ``2**(n/m - 1)``.
    """
    if not 1 <= r <= m:
        raise PreconditionError("count_residue needs 1 <= r <= m")
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if n == 0:
        return 1
    if r == m:
        return 2 ** (n // m - 1) if n % m == 0 else 0
    return count_two_part(r, m, n - r)


def count_up_to_m(m: int, n: int) -> int:
    """Compositions of ``n`` with every part at most ``m``.

    Solves ``R(n) = 2 R(n-1) - R(n-m-1)`` seeded with ``R(0) = 1`` and
    ``R(i) = 2**(i-1)`` for ``1 <= i <= m``.
    """
    if m < 1:
        raise PreconditionError("m must be positive")
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if n == 0:
        return 1
    if n <= m:
        return 2 ** (n - 1)

    def fr(q):
        return family_weight((2, -1), 1, m + 1, q - m, (-m, 1))

    return (
        2 ** (m - 1) * fr(n)
        - fr(n - 1)
        - sum(2 ** (i - 1) * fr(n - i - 1) for i in range(1, m))
    )


def count_from_m(m: int, n: int) -> int:
    """Compositions of ``n`` with every part at least ``m``.

    Equal, for ``n >= 1``, to the compositions of ``n - m`` into ``{1, m}``.
    """
    if m < 1:
        raise PreconditionError("m must be positive")
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if n == 0:
        return 1
    if n < m:
        return 0
    if m == 1:
        return 2 ** (n - 1)
    rest = n - m
    if rest < m:
        return 1

    def fr(q):
        return family_weight((1, 1), 1, m, q - (m - 1), (1 - m, 1))

    return fr(rest) + sum(fr(rest - i - 1) for i in range(m - 1))


def count_without_m(m: int, n: int) -> int:
    """Compositions of ``n`` in which no part equals ``m``.

    ``m = 1`` is the Fibonacci number ``F(n - 1)`` as a binomial sum.  For
    ``m > 1`` the recurrence is ``R(n) = 2 R(n-1) - R(n-m) + R(n-m-1)``.
    """
    if m < 1:
        raise PreconditionError("m must be positive")
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if n == 0:
        return 1
    if m == 1:
        if n == 1:
            return 0
        return sum(comb(t, n - 2 - t) for t in range((n - 1) // 2, n - 1))
    if n < m:
        return 2 ** (n - 1)
    if n == m:
        return 2 ** (m - 1) - 1

    def fr(q):
        return triple_family_weight((2, -1, 1), (1, m, m + 1), q - m, (1 - m, 1))

    return (
        (2 ** (m - 1) - 1) * fr(n)
        + 2 ** (m - 2) * fr(n - m)
        - sum(2 ** (i - 2) * fr(n - i) for i in range(2, m))
    )


def count_without_range(m1: int, m2: int, n: int) -> int:
    """Compositions of ``n`` in which no part lies in ``[m1 : m2]``.

    For ``m1 >= 2`` and ``m2 > m1`` the recurrence is
    ``R(n) = 2 R(n-1) - R(n-m1) + R(n-m2-1)``, seeded by ``2**(i-1)`` below
    ``m1`` and by the parts-at-most-``m1 - 1`` counts on ``[m1 : m2]``.
    """
    if not 1 <= m1 <= m2:
        raise PreconditionError("count_without_range needs 1 <= m1 <= m2")
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if m1 == m2:
        return count_without_m(m1, n)
    if m1 == 1:
        return count_from_m(m2 + 1, n)
    if n == 0:
        return 1
    if n < m1:
        return 2 ** (n - 1)

    def low(i):
        return count_up_to_m(m1 - 1, i)

    if n <= m2:
        return low(n)

    def fr(q):
        return triple_family_weight((2, -1, 1), (1, m1, m2 + 1), q - m2, (1 - m1, 1))

    shift = m2 - m1
    return (
        fr(n - 1)
        + low(m2) * fr(n)
        + sum(2 ** (i - 1) * fr(n - i - 1) for i in range(1, m1))
        + sum(low(i) * fr(n - i - 1) for i in range(m1, m2))
        - sum(2 ** (i - 1) * fr(n - i + shift) for i in range(shift + 1, m1))
        - sum(low(i) * fr(n - i + shift) for i in range(max(m1, shift + 1), m2))
    )


def match_family(s: PartSet) -> tuple[Family, tuple[int, ...]] | None:
    """Recognize a part set as one of the closed-form families."""
    if isinstance(s, Explicit) and len(s.values) == 2:
        return "TwoPart", s.values
    if isinstance(s, Residue):
        return "Residue", (s.r, s.m)
    if isinstance(s, Range) and s.lo == 1 and s.hi is not None:
        return "UpToM", (s.hi,)
    if isinstance(s, Range) and s.hi is None:
        return "FromM", (s.lo,)
    if isinstance(s, ComplementSet) and len(s.excluded) == 1:
        return "WithoutM", s.excluded
    if isinstance(s, ComplementRange):
        return "WithoutRange", (s.m1, s.m2)
    return None


_EVALUATORS = {
    "TwoPart": count_two_part,
    "Residue": count_residue,
    "UpToM": count_up_to_m,
    "FromM": count_from_m,
    "WithoutM": count_without_m,
    "WithoutRange": count_without_range,
}


def count_closed(s: PartSet, n: int) -> FamilyCount:
    """Closed-form count for any recognized family; otherwise UnsupportedInputError."""
    match = match_family(s)
    if match is None:
        raise UnsupportedInputError(f"no closed form for {s}")
    family, params = match
    return FamilyCount(family, params, n, _EVALUATORS[family](*params, n))
