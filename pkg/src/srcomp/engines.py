"""Uniform entry point over the five counting engines.

``brute``  memoized counting recursion (the oracle)
``dio``    multinomial sum over the solutions of ``v^S·x = n``
``dp1``    first interpreter iterated forward
``dp2``    run-based interpreter iterated forward
``closed`` resolvent closed form for a recognized family
``auto``   closed, else the cheaper interpreter, else dio, else brute
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from typing import Literal

from .closedforms import count_closed, match_family
from .diophantine import direct_count
from .errors import PreconditionError, UnsupportedInputError
from .interpreters import choose, first_interpreter, second_interpreter, t2_terms
from .lhrc import eval_dp
from .oracle import count_brute
from .partset import PartSet

Engine = Literal["brute", "dio", "dp1", "dp2", "closed", "auto"]
ENGINES: tuple[str, ...] = ("brute", "dio", "dp1", "dp2", "closed")


@dataclass
class CountReport:
    set_spec: str
    n: int
    engine: str
    count: str
    t1: int | str
    t2: int | str
    elapsed_ms: float

    def as_dict(self) -> dict:
        return asdict(self)


def _dp1(s: PartSet, n: int) -> int:
    if n == 0:
        return 1
    if not s.materialize(n):
        return 0
    return eval_dp(first_interpreter(s, n), n)


def _dp2(s: PartSet, n: int) -> int:
    # the run-based recurrence only holds for n > 1
    if n <= 1:
        return 1 if n == 0 else int(s.contains(1, n))
    if not s.materialize(n):
        return 0
    return eval_dp(second_interpreter(s, n), n)


def _closed(s: PartSet, n: int) -> int:
    return count_closed(s, n).count


_RUNNERS = {
    "brute": count_brute,
    "dio": direct_count,
    "dp1": _dp1,
    "dp2": _dp2,
    "closed": _closed,
}


def _auto(s: PartSet, n: int) -> tuple[str, int]:
    if match_family(s) is not None:
        return "closed", _closed(s, n)
    if n == 0 or not s.materialize(n):
        return "dp1", _dp1(s, n)
    if choose(s, n).which == "second":
        return "dp2", _dp2(s, n)
    return "dp1", _dp1(s, n)


def count_with(s: PartSet, n: int, engine: str) -> tuple[str, int]:
    """``(engine actually used, R(S, n))``; unsupported pairs raise UnsupportedInputError."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if engine == "auto":
        return _auto(s, n)
    if engine not in _RUNNERS:
        raise PreconditionError(f"unknown engine {engine!r}")
    return engine, _RUNNERS[engine](s, n)


def count(s: PartSet, n: int, engine: str = "auto") -> CountReport:
    start = time.perf_counter()
    used, value = count_with(s, n, engine)
    elapsed = (time.perf_counter() - start) * 1000
    return CountReport(
        set_spec=str(s),
        n=n,
        engine=used,
        count=str(value),
        t1=len(s.materialize(n)),
        t2=t2_terms(s, n),
        elapsed_ms=round(elapsed, 3),
    )


def applicable_engines(s: PartSet) -> list[str]:
    """Engines that support ``s`` for every ``n`` (dp2 may still skip single ``n``)."""
    names = ["brute"]
    if s.is_finite():
        names.append("dio")
    names.append("dp1")
    names.append("dp2")
    if match_family(s) is not None:
        names.append("closed")
    return names


def try_count(s: PartSet, n: int, engine: str) -> int | None:
    """Count with one engine, or None when that engine does not cover ``(s, n)``."""
    try:
        return count_with(s, n, engine)[1]
    except UnsupportedInputError:
        return None
