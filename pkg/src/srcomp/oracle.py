"""Brute-force ground truth for S-restricted compositions.

Everything here works directly from the definition (a composition of n is
``s;c`` with ``s`` in S and ``c`` a composition of ``n - s``) and is used
to check the faster engines.  ``build_next_level`` and ``window_generate``
are the two set-building procedures behind the recurrence and closed-form
machinery; they are exposed so their correctness can be tested.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from math import prod

from .errors import CeilingExceeded, PreconditionError, UnsupportedInputError
from .partset import Explicit, PartSet

Composition = tuple[int, ...]

DEFAULT_CEILING = 10**7


def count_brute(s: PartSet, n: int) -> int:
    """Number of compositions of ``n`` with every part in ``S ∩ [1:n]``.

    Memoized on the remaining sum, so it stays cheap long after listing
    the compositions has become impossible.
    """
    if n < 0:
        return 0
    parts = s.materialize(n)
    counts = [1] + [0] * n
    for m in range(1, n + 1):
        counts[m] = sum(counts[m - p] for p in parts if p <= m)
    return counts[n]


def iter_compositions(s: PartSet, n: int) -> Iterator[Composition]:
    """Yield the compositions of ``n`` over ``S ∩ [1:n]`` in lexicographic order."""
    parts = s.materialize(n)
    # reachable[m]: can m be written with these parts at all (prunes dead ends)
    reachable = [True] + [False] * n
    for m in range(1, n + 1):
        reachable[m] = any(reachable[m - p] for p in parts if p <= m)

    prefix: list[int] = []

    def walk(rest):
        if rest == 0:
            yield tuple(prefix)
            return
        for p in parts:
            if p > rest:
                break
            if reachable[rest - p]:
                prefix.append(p)
                yield from walk(rest - p)
                prefix.pop()

    if n >= 0 and reachable[n]:
        yield from walk(n)


def enumerate_compositions(
    s: PartSet, n: int, ceiling: int = DEFAULT_CEILING
) -> list[Composition]:
    """List every composition of ``n`` over ``S ∩ [1:n]``, lexicographically.

    ``n = 0`` gives ``[()]``.  Raises :class:`CeilingExceeded` instead of
    building a list longer than ``ceiling``.
    """
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    total = count_brute(s, n)
    if total > ceiling:
        raise CeilingExceeded(total, ceiling)
    return list(iter_compositions(s, n))


def weighted_sum(offsets: Sequence[int], coeffs: Sequence[int], m: int) -> int:
    """Sum of ``prod(coeff of each part)`` over compositions of ``m`` into ``offsets``.

    Lists the compositions one by one; it is the slow, obviously-correct
    path against which the Diophantine evaluation of the resolvent kernel
    is checked.
    """
    if m < 0:
        return 0
    weight = dict(zip(offsets, coeffs))
    return sum(
        prod(weight[p] for p in c) for c in iter_compositions(Explicit(tuple(offsets)), m)
    )


def build_next_level(
    s: PartSet, i: int, prior: Mapping[int, set[Composition]]
) -> set[Composition]:
    """Derive the compositions of ``i`` from those of smaller integers.

    Two moves cover every composition exactly once: bump the first part of
    a composition of ``i - 1`` when the bumped value is still in S, and
    prepend each part ``s`` whose predecessor ``s - 1`` is not in S to the
    compositions of ``i - s``.  ``prior`` must hold every level the moves
    read from; level ``i - 1`` is only read when some part of ``S ∩ [1:i]``
    has its predecessor in S.
    """
    if i < 1:
        raise PreconditionError("level must be a positive integer")
    parts = s.materialize(i)
    starters = [p for p in parts if not s.contains(p - 1, i)]
    bumps = i != 1 and len(starters) < len(parts)
    needed = {i - p for p in starters}
    if bumps:
        needed.add(i - 1)
    missing = sorted(j for j in needed if j not in prior)
    if missing:
        raise PreconditionError(f"missing prior levels {missing} for level {i}")

    result: set[Composition] = set()
    if bumps:
        for c in prior[i - 1]:
            if c and s.contains(c[0] + 1, i):
                result.add((c[0] + 1,) + c[1:])
    for p in starters:
        for c in prior[i - p]:
            result.add((p,) + c)
    return result


def window_generate(s: PartSet, n: int) -> set[Composition]:
    """Union of the composition sets of every integer in ``[n - max(S) + 1 : n]``.

    Grows tuples from the left with a work queue.  A tuple whose sum has
    entered the window is recorded but still extended while the sum stays
    at most ``n``: retiring it on entry would lose every composition with a
    proper suffix already in the window, such as ``(1, 1)`` for ``{1, 2}``
    and ``n = 2``.  ``n // min(S)`` rounds suffice.  Only finite,
    n-independent sets are accepted.
    """
    parts = s.finite_values()
    if parts is None:
        raise UnsupportedInputError(f"window generation needs a finite set, got {s}")
    lo_part, hi_part = parts[0], parts[-1]
    if n < hi_part:
        raise PreconditionError(f"n must be at least max(S) = {hi_part}")
    threshold = n - (hi_part - 1)

    queue = {(p,) for p in parts}
    result: set[Composition] = set()
    for _ in range(n // lo_part):
        grown = set()
        for q in queue:
            total = sum(q)
            if total >= threshold:
                result.add(q)
            grown.update((p,) + q for p in parts if total + p <= n)
        queue = grown
    return result
