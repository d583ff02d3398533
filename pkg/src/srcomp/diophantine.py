"""Linear Diophantine equations ``a·x = q`` over nonnegative integers.

Exact integer arithmetic throughout: Bezout coefficients, brute-force
solution sets, the one-parameter family of solutions in two unknowns,
multinomial coefficients and signed power products.  ``direct_count``
combines them into the plain multinomial count of compositions.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from math import comb, prod
from typing import NamedTuple

from .errors import PreconditionError, UnsupportedInputError
from .partset import PartSet

SolutionVector = tuple[int, ...]


class BezoutTriple(NamedTuple):
    g: int
    r: int
    s: int


class TwoVarFamily(NamedTuple):
    """Solutions ``point(t)`` of ``a1*x1 + a2*x2 = q`` for ``lower <= t <= upper``."""

    lower: int
    upper: int
    point: Callable[[int], SolutionVector]

    def solutions(self) -> Iterator[SolutionVector]:
        for t in range(self.lower, self.upper + 1):
            yield self.point(t)


def bezout(a1: int, a2: int) -> BezoutTriple:
    """Extended Euclid: ``(g, r, s)`` with ``r*a1 + s*a2 == g == gcd(a1, a2)``.

    >>> bezout(3, 5)
    BezoutTriple(g=1, r=2, s=-1)
    """
    if a1 < 1 or a2 < 1:
        raise PreconditionError("Bezout coefficients need positive arguments")
    if a2 % a1 == 0:
        return BezoutTriple(a1, 1, 0)
    old_r, r = a1, a2
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_s, s = s, old_s - quo * s
        old_t, t = t, old_t - quo * t
    return BezoutTriple(old_r, old_s, old_t)


def iter_nonneg_solutions(a: Sequence[int], q: int) -> Iterator[SolutionVector]:
    """Yield every ``x >= 0`` with ``a·x == q``; recursion on the last coordinate."""
    if not a:
        raise PreconditionError("coefficient vector must be non-empty")
    if q < 0:
        return
    *head, last = a
    if not head:
        if q % last == 0:
            yield (q // last,)
        return
    for x_last in range(q // last + 1):
        for rest in iter_nonneg_solutions(head, q - last * x_last):
            yield rest + (x_last,)


def nonneg_solutions(a: Sequence[int], q: int) -> set[SolutionVector]:
    """The full solution set ``{x >= 0 : a·x = q}``.

    >>> sorted(nonneg_solutions([1, 2], 3))
    [(1, 1), (3, 0)]
    """
    return set(iter_nonneg_solutions(a, q))


def two_var_family(
    a1: int, a2: int, q: int, coefficients: tuple[int, int] | None = None
) -> TwoVarFamily:
    """Parametrize the nonnegative solutions of ``a1*x1 + a2*x2 = q``.

    With ``(g, r, s) = bezout(a1, a2)`` the solutions are
    ``x(t) = (r*q/g + (a2/g)*t, s*q/g - (a1/g)*t)``; ``lower`` and ``upper``
    are the extreme ``t`` keeping both components nonnegative.  When ``g``
    does not divide ``q`` the family is empty (``lower > upper``).

    ``coefficients`` substitutes another Bezout pair ``(r, s)``; the set of
    points is unchanged, only the parameter shifts.
    """
    if not 0 < a1 < a2:
        raise PreconditionError("two_var_family needs 0 < a1 < a2")
    g, r, s = bezout(a1, a2)
    if coefficients is not None:
        r, s = coefficients
        if r * a1 + s * a2 != g:
            raise PreconditionError(f"({r}, {s}) are not Bezout coefficients of {a1}, {a2}")
    if q % g:
        return TwoVarFamily(0, -1, _no_point)
    base1, base2 = r * q // g, s * q // g
    step1, step2 = a2 // g, a1 // g

    def point(t: int) -> SolutionVector:
        return (base1 + step1 * t, base2 - step2 * t)

    # x1 >= 0  <=>  t >= -r*q/a2 ;  x2 >= 0  <=>  t <= s*q/a1
    return TwoVarFamily(-((r * q) // a2), (s * q) // a1, point)


def _no_point(t: int) -> SolutionVector:
    raise ValueError("empty solution family has no points")


def multinomial(x: Sequence[int]) -> int:
    """``(sum x)! / prod(x_i!)``, built from binomials to stay exact."""
    total, result = 0, 1
    for xi in x:
        if xi < 0:
            raise PreconditionError("multinomial needs nonnegative entries")
        total += xi
        result *= comb(total, xi)
    return result


def power_product(k: Sequence[int], x: Sequence[int]) -> int:
    """``prod(k_j ** x_j)``, sign-exact for negative bases."""
    if len(k) != len(x):
        raise PreconditionError("power_product needs vectors of equal length")
    return prod(kj**xj for kj, xj in zip(k, x))


def family_weight(
    k: Sequence[int], a1: int, a2: int, q: int, coefficients: tuple[int, int] | None = None
) -> int:
    """``sum P_o(k, x) * C(x)`` over the nonnegative solutions of ``a1 x1 + a2 x2 = q``."""
    family = two_var_family(a1, a2, q, coefficients)
    return sum(power_product(k, x) * multinomial(x) for x in family.solutions())


def triple_family_weight(
    k: Sequence[int],
    a: Sequence[int],
    q: int,
    coefficients: tuple[int, int] | None = None,
) -> int:
    """Same over ``a1 x1 + a2 x2 + a3 x3 = q``, looping over ``x3``.

    The inner two-unknown family is solved for the residual ``q - a3*x3``.
    """
    a1, a2, a3 = a
    if q < 0:
        return 0
    total = 0
    for x3 in range(q // a3 + 1):
        for x1, x2 in two_var_family(a1, a2, q - a3 * x3, coefficients).solutions():
            x = (x1, x2, x3)
            total += power_product(k, x) * multinomial(x)
    return total


def direct_count(s: PartSet, n: int) -> int:
    """Count compositions of ``n`` as ``sum(multinomial(x))`` over ``v^S·x = n``.

    Each nonnegative solution ``x`` fixes how often every part occurs, and
    the multinomial counts the distinct orderings of that multiset.
    """
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if not s.is_finite():
        raise UnsupportedInputError(f"direct counting needs a finite part set, got {s}")
    parts = s.materialize(n)
    if n == 0:
        return 1
    if not parts:
        return 0
    return sum(multinomial(x) for x in iter_nonneg_solutions(parts, n))

