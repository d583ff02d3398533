"""Linear homogeneous recurrences with constant coefficients.

A recurrence ``f(n) = sum_j k_j * f(n - a_j)`` is given by its offsets
``a`` (strictly increasing), coefficients ``k`` (nonzero) and the initial
values ``f(0) .. f(a_l - 1)``.  Besides plain forward iteration it can be
solved without iteration: fully expanding the recurrence writes ``f(n)``
as a combination of the initial values whose weights are signed sums over
compositions of ``n - i`` into the offsets, and those sums are evaluated
by enumerating nonnegative solutions of ``a·x = m`` (the *resolvent*)::

    W(m) = sum over x >= 0 with a·x = m of  prod(k_j ** x_j) * multinomial(x)

``f_R(q)`` is ``W`` shifted by ``a_l - a_1``.  Two- and three-term
recurrences get dedicated evaluators built on the one-parameter solution
family of a two-unknown equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diophantine import (
    family_weight,
    iter_nonneg_solutions,
    multinomial,
    power_product,
    triple_family_weight,
)
from .errors import PreconditionError


@dataclass(frozen=True)
class Lhrc:
    offsets: tuple[int, ...]
    coeffs: tuple[int, ...]
    initial: tuple[int, ...]

    def __post_init__(self):
        for name in ("offsets", "coeffs", "initial"):
            object.__setattr__(self, name, tuple(int(v) for v in getattr(self, name)))
        a, k = self.offsets, self.coeffs
        if not a:
            raise PreconditionError("a recurrence needs at least one term")
        if len(a) != len(k):
            raise PreconditionError("offsets and coefficients differ in length")
        if a[0] < 1 or any(y <= x for x, y in zip(a, a[1:])):
            raise PreconditionError("offsets must be positive and strictly increasing")
        if 0 in k:
            raise PreconditionError("coefficients must be nonzero")
        if len(self.initial) != a[-1]:
            raise PreconditionError(
                f"need exactly {a[-1]} initial values, got {len(self.initial)}"
            )

    @property
    def order(self) -> int:
        """Largest offset, i.e. the number of initial values."""
        return self.offsets[-1]

    @property
    def spread(self) -> int:
        """``a_l - a_1``, the shift between the resolvent and ``f_R``."""
        return self.offsets[-1] - self.offsets[0]

    def kappa(self, offset: int) -> int:
        return dict(zip(self.offsets, self.coeffs)).get(offset, 0)


def eval_dp(rec: Lhrc, n: int) -> int:
    """``f(n)`` by forward iteration from the initial values."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    values = list(rec.initial)
    terms = list(zip(rec.offsets, rec.coeffs))
    for m in range(len(values), n + 1):
        values.append(sum(k * values[m - a] for a, k in terms))
    return values[n]


@lru_cache(maxsize=None)
def resolvent_sum(offsets: tuple[int, ...], coeffs: tuple[int, ...], m: int) -> int:
    """Signed weight of all compositions of ``m`` into ``offsets``, via ``a·x = m``."""
    if m < 0:
        return 0
    if m == 0:
        return 1
    return sum(
        power_product(coeffs, x) * multinomial(x) for x in iter_nonneg_solutions(offsets, m)
    )


def f_R(rec: Lhrc, q: int) -> int:
    """Resolvent kernel: ``W(q - (a_l - a_1))``; 0 below the empty composition."""
    return resolvent_sum(rec.offsets, rec.coeffs, q - rec.spread)


def v_coeffs(rec: Lhrc, n: int) -> dict[int, int]:
    """Weights ``V(n, i)`` with ``f(n) = sum_i V(n, i) * f(i)`` over ``i < a_l``.

    For ``i >= a_l - a_1`` every expansion path reaching ``i`` is allowed;
    below that the last step into ``i`` must use an offset of at least
    ``a_l - i``, which excludes ``a_1`` and leaves one resolvent term per
    larger offset.
    """
    if n < rec.order:
        raise PreconditionError(f"V(n, i) is defined for n >= {rec.order}")
    a_l, spread = rec.order, rec.spread
    weights = {}
    for i in range(a_l):
        if i >= spread:
            weights[i] = f_R(rec, n - i + spread)
        else:
            weights[i] = sum(
                k * f_R(rec, n - i - alpha + spread)
                for alpha, k in zip(rec.offsets[1:], rec.coeffs[1:])
                if alpha >= a_l - i
            )
    return weights


def solve_closed(rec: Lhrc, n: int) -> int:
    """``f(n)`` as a resolvent-weighted combination of the initial values."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if n < rec.order:
        return rec.initial[n]
    return sum(v * f for v, f in zip(v_coeffs(rec, n).values(), rec.initial))


def solve_two_term(rec: Lhrc, n: int) -> int:
    """Closed form for ``f(n) = k1 f(n-a1) + k2 f(n-a2)``."""
    if len(rec.offsets) != 2:
        raise PreconditionError("solve_two_term needs exactly two offsets")
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if n < rec.order:
        return rec.initial[n]
    (a1, a2), (_, k2), f = rec.offsets, rec.coeffs, rec.initial

    def fr(q):
        return family_weight(rec.coeffs, a1, a2, q - (a2 - a1))

    return k2 * sum(fr(n - i - a1) * f[i] for i in range(a2 - a1)) + sum(
        fr(n - i + (a2 - a1)) * f[i] for i in range(a2 - a1, a2)
    )


def solve_three_term(rec: Lhrc, n: int) -> int:
    """Closed form for ``f(n) = k1 f(n-a1) + k2 f(n-a2) + k3 f(n-a3)``."""
    if len(rec.offsets) != 3:
        raise PreconditionError("solve_three_term needs exactly three offsets")
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if n < rec.order:
        return rec.initial[n]
    (a1, a2, a3), (_, k2, k3), f = rec.offsets, rec.coeffs, rec.initial

    spread = a3 - a1

    def fr(q):
        return triple_family_weight(rec.coeffs, rec.offsets, q - spread)

    return (
        k2 * sum(fr(n - i - a2 + spread) * f[i] for i in range(a3 - a2, spread))
        + k3 * sum(fr(n - i - a1) * f[i] for i in range(spread))
        + sum(fr(n - i + spread) * f[i] for i in range(spread, a3))
    )
