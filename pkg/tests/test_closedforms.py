import pytest

from srcomp.closedforms import (
    count_closed,
    count_from_m,
    count_residue,
    count_two_part,
    count_up_to_m,
    count_without_m,
    count_without_range,
    match_family,
)
from srcomp.errors import PreconditionError, UnsupportedInputError
from srcomp.oracle import count_brute
from srcomp.partset import ComplementRange, ComplementSet, Explicit, Range, Residue, parse_set
from srcomp.sequences import m_fibonacci

N = range(29)


def test_examples():
    assert count_two_part(1, 2, 4) == 5
    assert count_two_part(2, 3, 7) == 3
    assert count_two_part(2, 4, 5) == 0
    assert count_residue(1, 2, 5) == 5
    assert count_residue(2, 3, 9) == 3
    assert count_residue(1, 2, 1) == 1
    assert count_up_to_m(3, 4) == 7
    assert all(count_up_to_m(m, 5) == 16 for m in range(5, 9))
    assert count_up_to_m(1, 4) == 1
    assert count_from_m(2, 5) == 3
    assert count_from_m(1, 6) == 32
    assert count_from_m(6, 5) == 0
    assert count_without_m(2, 5) == 7
    assert count_without_m(1, 5) == 3
    assert count_without_m(7, 5) == 16
    assert count_without_range(2, 3, 5) == 4
    assert count_without_range(3, 4, 6) == count_brute(ComplementRange(3, 4), 6)
    assert all(count_without_range(1, k, n) == 0 for n in range(1, 8) for k in range(n, 10))


def test_preconditions():
    with pytest.raises(PreconditionError):
        count_two_part(3, 3, 6)
    with pytest.raises(PreconditionError):
        count_residue(3, 2, 6)
    with pytest.raises(PreconditionError):
        count_without_range(3, 2, 6)
    with pytest.raises(PreconditionError):
        count_up_to_m(0, 6)


def test_empty_composition():
    for f, args in [
        (count_two_part, (2, 5)),
        (count_residue, (2, 3)),
        (count_residue, (3, 3)),
        (count_up_to_m, (3,)),
        (count_from_m, (4,)),
        (count_without_m, (1,)),
        (count_without_m, (3,)),
        (count_without_range, (2, 4)),
    ]:
        assert f(*args, 0) == 1


@pytest.mark.parametrize("a1", range(1, 7))
def test_two_part_matches_oracle(a1):
    for a2 in range(a1 + 1, 10):
        for n in N:
            assert count_two_part(a1, a2, n) == count_brute(Explicit((a1, a2)), n)


@pytest.mark.parametrize("m", range(1, 8))
def test_residue_matches_oracle(m):
    for r in range(1, m + 1):
        for n in N:
            assert count_residue(r, m, n) == count_brute(Residue(r, m), n)


def test_residue_full_class_counts_every_multiple():
    # r = m is every positive multiple of m, not only m itself
    assert count_residue(2, 2, 6) == 4 == count_brute(Residue(2, 2), 6)


@pytest.mark.parametrize("m", range(1, 10))
def test_single_parameter_families_match_oracle(m):
    for n in N:
        assert count_up_to_m(m, n) == count_brute(Range(1, m), n)
        assert count_from_m(m, n) == count_brute(Range(m), n)
        assert count_without_m(m, n) == count_brute(ComplementSet((m,)), n)


@pytest.mark.parametrize("m1", range(1, 8))
def test_without_range_matches_oracle(m1):
    for m2 in range(m1, 11):
        for n in N:
            assert count_without_range(m1, m2, n) == count_brute(ComplementRange(m1, m2), n)


def test_vacuous_exclusion():
    for n in range(1, 15):
        for m in range(n + 1, n + 4):
            assert count_without_m(m, n) == count_up_to_m(m, n) == 2 ** (n - 1)


def test_odd_parts_are_fibonacci():
    # aligned with the F(1) = F(2) = 1 numbering
    for n in range(1, 29):
        assert count_residue(1, 2, n) == m_fibonacci(2, n)


@pytest.mark.parametrize(
    "spec, family",
    [
        ("{2,5}", "TwoPart"),
        ("mod(2,3)", "Residue"),
        ("1..4", "UpToM"),
        ("3..", "FromM"),
        ("not{3}", "WithoutM"),
        ("not(2..4)", "WithoutRange"),
    ],
)
def test_count_closed_dispatch(spec, family):
    s = parse_set(spec)
    assert match_family(s)[0] == family
    for n in range(15):
        result = count_closed(s, n)
        assert result.family == family
        assert result.count == count_brute(s, n)


@pytest.mark.parametrize("spec", ["{1,2,3}", "{4}", "2..5", "not{2,3}"])
def test_count_closed_unsupported(spec):
    with pytest.raises(UnsupportedInputError):
        count_closed(parse_set(spec), 5)
