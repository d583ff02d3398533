import pytest

from srcomp.closedforms import count_without_m
from srcomp.sequences import m_fibonacci

from errata_cases import all_cases

CASES = all_cases()


@pytest.mark.parametrize("case", CASES, ids=[c.label for c in CASES])
def test_corrected_reading_matches_oracle(case):
    assert case.corrected_mismatches() == []


@pytest.mark.parametrize("case", CASES, ids=[c.label for c in CASES])
def test_printed_reading_first_diverges(case):
    assert case.first_divergence() == case.first_bad


def test_printed_parts_sum_is_next_fibonacci():
    printed = next(c for c in CASES if c.label == "parts >= 2 binomial sum").printed
    assert all(printed(n) == m_fibonacci(2, n) == count_without_m(1, n + 1) for n in range(2, 29))
