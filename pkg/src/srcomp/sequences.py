"""Fibonacci-type sequences, computed both by iteration and in closed form.

Initial conditions used here::

    m-Fibonacci  F^m(0..m-2) = 0, F^m(m-1) = 1   F^m(n) = sum_{i=1..m} F^m(n-i)
    Lucas        Lu(0) = 1, Lu(1) = 3              Lu(n) = Lu(n-1) + Lu(n-2)
    Padovan      P(0), P(1), P(2) = 0, 1, 0        P(n) = P(n-2) + P(n-3)
    Perrin       3, 0, 2                           same recurrence as Padovan
    Pell         0, 1                              Pl(n) = 2 Pl(n-1) + Pl(n-2)
    Pell-Lucas   2, 2                              same recurrence as Pell

The Lucas seeds are not the common (2, 1): this Lucas sequence is the
common one shifted, ``Lu(n) = L(n+1)`` in the usual numbering.

``verify_bijections`` checks five composition/sequence correspondences
by brute force, searching for the index shift that makes each one hold.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from math import comb
from typing import Literal

from .diophantine import family_weight
from .errors import PreconditionError
from .lhrc import Lhrc, eval_dp
from .oracle import count_brute
from .partset import ComplementSet, Explicit, PartSet, Residue

Method = Literal["closed", "recurrence"]


def _check(n: int, method: str) -> None:
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if method not in ("closed", "recurrence"):
        raise PreconditionError(f"unknown method {method!r}")


def m_fibonacci(m: int, n: int, method: Method = "closed") -> int:
    """``F^m(n)``; ``m = 2`` is Fibonacci, 3 Tribonacci, 4 Tetranacci.

    The closed form rewrites the recurrence as
    ``F^m(n) = 2 F^m(n-1) - F^m(n-m-1)`` and evaluates its two-term
    solution ``f_R(n) - f_R(n-m)``.
    """
    if m < 2:
        raise PreconditionError("m-Fibonacci needs m >= 2")
    _check(n, method)
    if method == "recurrence":
        rec = Lhrc(tuple(range(1, m + 1)), (1,) * m, (0,) * (m - 1) + (1,))
        return eval_dp(rec, n)
    if n <= m:
        return 1 if n >= m - 1 else 0

    def fr(q):
        return family_weight((2, -1), 1, m + 1, q - m, (-m, 1))

    return fr(n) - fr(n - m)


def _fib_sum(n: int) -> int:
    """``F(n) = sum_{t=0}^{(n-1)//2} C(n-1-t, t)``; zero for ``n <= 0``."""
    return sum(comb(n - 1 - t, t) for t in range((n - 1) // 2 + 1)) if n > 0 else 0


def lucas(n: int, method: Method = "closed") -> int:
    _check(n, method)
    if method == "recurrence":
        return eval_dp(Lhrc((1, 2), (1, 1), (1, 3)), n)
    if n == 0:
        return 1
    return _fib_sum(n - 1) + 3 * _fib_sum(n)


def _padovan_sum(n: int) -> int:
    # t from ceil((n-1)/3) to floor((n-1)/2)
    return sum(comb(t, n - 1 - 2 * t) for t in range(-((1 - n) // 3), (n - 1) // 2 + 1))


def padovan(n: int, method: Method = "closed") -> int:
    _check(n, method)
    if method == "recurrence":
        return eval_dp(Lhrc((2, 3), (1, 1), (0, 1, 0)), n)
    return _padovan_sum(n)


def perrin(n: int, method: Method = "closed") -> int:
    _check(n, method)
    if method == "recurrence":
        return eval_dp(Lhrc((2, 3), (1, 1), (3, 0, 2)), n)
    if n == 0:
        return 3
    return 2 * _padovan_sum(n - 1) + 3 * _padovan_sum(n - 2)


def _pell_sum(n: int) -> int:
    # exponent 2t - n + 1 is nonnegative because t >= ceil((n-1)/2)
    return sum(2 ** (2 * t - n + 1) * comb(t, n - 1 - t) for t in range(n // 2, n))


def pell(n: int, method: Method = "closed") -> int:
    _check(n, method)
    if method == "recurrence":
        return eval_dp(Lhrc((1, 2), (2, 1), (0, 1)), n)
    return _pell_sum(n)


def pell_lucas(n: int, method: Method = "closed") -> int:
    _check(n, method)
    if method == "recurrence":
        return eval_dp(Lhrc((1, 2), (2, 1), (2, 2)), n)
    if n == 0:
        return 2
    return 2 * _pell_sum(n) + 2 * _pell_sum(n - 1)


SEQUENCES: dict[str, Callable[..., int]] = {
    "mfib": m_fibonacci,
    "lucas": lucas,
    "padovan": padovan,
    "perrin": perrin,
    "pell": pell,
    "pell-lucas": pell_lucas,
}


# -- bijection checks ---------------------------------------------------------

MAX_SHIFT = 6

# Reference sequences under two indexing conventions.  "seeded" uses the
# seeds above; "standard" is Padovan 1, 1, 1, 2, ... from index 0 and
# Fibonacci with F(1) = F(2) = 1.  The two agree for Fibonacci.
_REFERENCE: dict[tuple[str, str], Callable[[int], int]] = {
    ("padovan", "standard"): lambda k: eval_dp(Lhrc((2, 3), (1, 1), (1, 1, 1)), k),
    ("padovan", "seeded"): padovan,
    ("fibonacci", "standard"): lambda k: m_fibonacci(2, k, "recurrence"),
    ("fibonacci", "seeded"): lambda k: m_fibonacci(2, k, "recurrence"),
}


@dataclass
class BijectionVerdict:
    claim_id: int
    description: str
    sequence: str
    stated_shift: int
    status: Literal["ConfirmedWithShift", "Refuted"]
    shift: int | None = None
    convention: str | None = None
    #: (n, count, sequence value) for every tested n under the chosen shift
    evidence: list[tuple[int, int, int]] = field(default_factory=list)
    #: every (convention, shift) that fits over the whole range
    fits: list[tuple[str, int]] = field(default_factory=list)
    #: one (convention, shift, n, count, sequence value) per failed candidate
    counterexamples: list[tuple[str, int, int, int, int]] = field(default_factory=list)


def _claims(n_max: int) -> list[tuple[int, str, PartSet, str, int]]:
    odd_above_one = Explicit(tuple(range(3, max(n_max, 3) + 1, 2)))
    return [
        (1, "compositions into {2,3}", Explicit((2, 3)), "padovan", -2),
        (2, "compositions with no part equal to 2", ComplementSet((2,)), "padovan", -2),
        (3, "compositions into parts = 2 (mod 3)", Residue(2, 3), "padovan", -4),
        (4, "compositions into odd parts > 1", odd_above_one, "padovan", -5),
        (5, "compositions into odd parts", Residue(1, 2), "fibonacci", 0),
    ]


def verify_bijections(n_max: int = 30) -> list[BijectionVerdict]:
    """Test the five correspondences for ``1 <= n <= n_max``.

    For every claim and every shift ``|d| <= 6`` under both conventions,
    compare the brute-force count at ``n`` with the sequence at ``n + d``
    (skipping ``n + d < 0``).  The first fitting candidate, standard
    convention first and smaller ``|d|`` first, becomes the verdict.
    """
    if n_max < 10:
        raise PreconditionError("n_max must be at least 10")
    shifts = sorted(range(-MAX_SHIFT, MAX_SHIFT + 1), key=lambda d: (abs(d), d))
    verdicts = []
    for claim_id, text, part_set, seq, stated in _claims(n_max):
        lhs = {n: count_brute(part_set, n) for n in range(1, n_max + 1)}
        verdict = BijectionVerdict(claim_id, text, seq, stated, "Refuted")
        for convention in ("standard", "seeded"):
            ref = _REFERENCE[seq, convention]
            for d in shifts:
                triples = [(n, c, ref(n + d)) for n, c in lhs.items() if n + d >= 0]
                bad = next((t for t in triples if t[1] != t[2]), None)
                if bad is None:
                    verdict.fits.append((convention, d))
                    if verdict.status == "Refuted":
                        verdict.status = "ConfirmedWithShift"
                        verdict.shift, verdict.convention = d, convention
                        verdict.evidence = triples
                else:
                    verdict.counterexamples.append((convention, d, *bad))
        verdicts.append(verdict)
    return verdicts
