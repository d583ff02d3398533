import pytest

from srcomp.errors import UnsupportedInputError
from srcomp.interpreters import (
    choose,
    first_interpreter,
    second_interpreter,
    second_interpreter_terms,
    t2_terms,
)
from srcomp.lhrc import eval_dp
from srcomp.oracle import count_brute
from srcomp.partset import ComplementSet, Explicit, Range, Residue, parse_set

from conftest import BATTERY


def test_first_interpreter_examples():
    rec = first_interpreter(Explicit((1, 2)), 10)
    assert (rec.offsets, rec.coeffs, rec.initial) == ((1, 2), (1, 1), (1, 1))
    rec = first_interpreter(Explicit((2, 3)), 10)
    assert (rec.offsets, rec.coeffs, rec.initial) == ((2, 3), (1, 1), (1, 0, 1))
    with pytest.raises(UnsupportedInputError):
        first_interpreter(Explicit((4,)), 3)


def test_second_interpreter_examples():
    rec = second_interpreter(Range(1, 3), 10)
    assert (rec.offsets, rec.coeffs) == ((1, 4), (2, -1))
    rec = second_interpreter(ComplementSet((2,)), 10)
    assert (rec.offsets, rec.coeffs) == ((1, 2, 3), (2, -1, 1))
    rec = second_interpreter(Explicit((1,)), 5)
    assert (rec.offsets, rec.coeffs) == ((1, 2), (2, -1))
    assert eval_dp(rec, 5) == 1


def test_second_interpreter_rejects():
    with pytest.raises(UnsupportedInputError):
        second_interpreter(Residue(1, 2), 10)
    # S up to n is all of [1:n]: the recurrence would need to hold at n = 1
    with pytest.raises(UnsupportedInputError):
        second_interpreter(Range(1, 3), 3)


def test_unbounded_range_has_two_terms():
    rec = second_interpreter(Range(3), 12)
    assert (rec.offsets, rec.coeffs) == ((1, 3), (1, 1))


def test_choose_examples():
    c = choose(Explicit((2, 3)), 20)
    assert (c.which, c.t1, c.t2) == ("first", 2, 3)
    c = choose(Range(1, 8), 20)
    assert (c.which, c.t1, c.t2) == ("second", 8, 2)
    c = choose(ComplementSet((3,)), 20)
    assert (c.which, c.t1, c.t2) == ("second", 19, 3)
    c = choose(Residue(1, 2), 20)
    assert (c.which, c.t2) == ("first", "unbounded")
    assert t2_terms(Residue(1, 2), 20) == "unbounded"


def _eval_raw(s, n):
    """Iterate the unmerged run-based terms directly, seeded by the oracle."""
    values = [count_brute(s, i) for i in range(2)]
    for m in range(2, n + 1):
        terms = second_interpreter_terms(s, m)
        values.append(sum(k * (values[m - o] if m >= o else 0) for o, k in terms))
    return values[n]


@pytest.mark.parametrize("spec", [b for b in BATTERY if not b.startswith("mod")])
def test_merging_preserves_value(spec):
    s = parse_set(spec)
    for n in range(2, 29):
        assert _eval_raw(s, n) == count_brute(s, n)
        try:
            rec = second_interpreter(s, n)
        except UnsupportedInputError:
            continue
        assert eval_dp(rec, n) == _eval_raw(s, n)


@pytest.mark.parametrize("spec", BATTERY + ["{1}", "{2,3,4,7}", "not{1,4}", "4..9"])
def test_interpreters_match_oracle(spec):
    s = parse_set(spec)
    for n in range(1, 29):
        expected = count_brute(s, n)
        if s.materialize(n):
            assert eval_dp(first_interpreter(s, n), n) == expected
            c = choose(s, n)
            assert eval_dp(c.rec, n) == expected
        try:
            rec = second_interpreter(s, n)
        except UnsupportedInputError:
            continue
        assert eval_dp(rec, n) == expected
