"""Counting and enumerating integer compositions with restricted parts."""

from .closedforms import count_closed, match_family
from .diophantine import bezout, direct_count, nonneg_solutions, two_var_family
from .engines import CountReport, count
from .errors import CeilingExceeded, PreconditionError, SetSyntaxError, UnsupportedInputError
from .interpreters import choose, first_interpreter, second_interpreter
from .lhrc import Lhrc, eval_dp, f_R, solve_closed, solve_three_term, solve_two_term
from .oracle import count_brute, enumerate_compositions
from .partset import (
    ComplementRange,
    ComplementSet,
    Explicit,
    PartSet,
    Range,
    Residue,
    parse_set,
)
from .sequences import verify_bijections

__all__ = [
    "CeilingExceeded",
    "ComplementRange",
    "ComplementSet",
    "CountReport",
    "Explicit",
    "Lhrc",
    "PartSet",
    "PreconditionError",
    "Range",
    "Residue",
    "SetSyntaxError",
    "UnsupportedInputError",
    "bezout",
    "choose",
    "count",
    "count_brute",
    "count_closed",
    "direct_count",
    "enumerate_compositions",
    "eval_dp",
    "f_R",
    "first_interpreter",
    "match_family",
    "nonneg_solutions",
    "parse_set",
    "second_interpreter",
    "solve_closed",
    "solve_three_term",
    "solve_two_term",
    "two_var_family",
    "verify_bijections",
]
