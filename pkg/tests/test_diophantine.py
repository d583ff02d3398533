from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from srcomp.diophantine import (
    bezout,
    direct_count,
    family_weight,
    iter_nonneg_solutions,
    multinomial,
    nonneg_solutions,
    power_product,
    triple_family_weight,
    two_var_family,
)
from srcomp.errors import PreconditionError, UnsupportedInputError
from srcomp.oracle import count_brute
from srcomp.partset import Explicit, Range, Residue, parse_set

from conftest import BATTERY


@pytest.mark.parametrize(
    "a1, a2, expected",
    [((3), 5, (1, 2, -1)), (1, 7, (1, 1, 0)), (1, 1, (1, 1, 0)), (4, 6, (2, -1, 1))],
)
def test_bezout_examples(a1, a2, expected):
    assert tuple(bezout(a1, a2)) == expected


@given(st.integers(1, 500), st.integers(1, 500))
def test_bezout_identity(a1, a2):
    g, r, s = bezout(a1, a2)
    assert r * a1 + s * a2 == g
    assert a1 % g == 0 and a2 % g == 0


def test_nonneg_solutions_examples():
    assert nonneg_solutions([1, 2], 3) == {(3, 0), (1, 1)}
    assert nonneg_solutions([2], 5) == set()
    assert nonneg_solutions([1], 0) == {(0,)}
    assert nonneg_solutions([1, 2], -1) == set()


def test_two_var_family_examples():
    fam = two_var_family(1, 3, 4, (1, 0))
    assert set(fam.solutions()) == {(4, 0), (1, 1)}
    assert set(two_var_family(2, 4, 5).solutions()) == set()
    assert set(two_var_family(2, 3, 6).solutions()) == {(3, 0), (0, 2)}


def test_two_var_family_rejects():
    with pytest.raises(PreconditionError):
        two_var_family(3, 3, 6)
    with pytest.raises(PreconditionError):
        two_var_family(2, 3, 6, (1, 1))


vectors = st.lists(st.integers(1, 9), min_size=1, max_size=3)


@given(vectors, st.integers(0, 60))
def test_solutions_by_exhaustive_scan(a, q):
    got = nonneg_solutions(a, q)
    ranges = [range(q // ai + 1) for ai in a]
    expected = set()

    def scan(prefix, rest):
        if not rest:
            if sum(ai * xi for ai, xi in zip(a, prefix)) == q:
                expected.add(tuple(prefix))
            return
        for x in rest[0]:
            scan(prefix + [x], rest[1:])

    scan([], ranges)
    assert got == expected
    assert len(list(iter_nonneg_solutions(a, q))) == len(got)


@given(st.integers(1, 9), st.integers(1, 9), st.integers(0, 60))
def test_family_matches_solution_set(a1, d, q):
    a2 = a1 + d
    fam = two_var_family(a1, a2, q)
    pts = list(fam.solutions())
    assert len(pts) == len(set(pts))
    assert set(pts) == nonneg_solutions([a1, a2], q)


@given(st.integers(1, 9), st.integers(1, 9), st.integers(0, 60), st.integers(-5, 5))
def test_bezout_invariance(a1, d, q, w):
    a2 = a1 + d
    g, r, s = bezout(a1, a2)
    base = two_var_family(a1, a2, q)
    moved = two_var_family(a1, a2, q, (r + a2 // g * w, s - a1 // g * w))
    assert set(moved.solutions()) == set(base.solutions())
    if q % g == 0:
        # the base point moves by (a2/g, -a1/g) * (q/g) * w
        shift = q // g * w
        assert (moved.lower, moved.upper) == (base.lower - shift, base.upper - shift)


@pytest.mark.parametrize("x, expected", [([2, 1], 3), ([0, 0, 0], 1), ([1, 1, 1], 6), ([], 1)])
def test_multinomial_examples(x, expected):
    assert multinomial(x) == expected


@given(st.lists(st.integers(0, 6), max_size=4))
def test_multinomial_permutation_invariant(x):
    values = {multinomial(p) for p in permutations(x)}
    assert len(values) == 1


def test_power_product_examples():
    assert power_product([2, -1], [3, 1]) == -8
    assert power_product([2, -1], [0, 0]) == 1
    assert power_product([2, -1, 1], [1, 2, 5]) == 2
    with pytest.raises(PreconditionError):
        power_product([1], [1, 2])


def test_family_weights_match_full_enumeration():
    for k, a in [((1, 1), (1, 2)), ((2, -1), (1, 4)), ((3, -2), (2, 5))]:
        for q in range(40):
            expected = sum(power_product(k, x) * multinomial(x) for x in nonneg_solutions(a, q))
            assert family_weight(k, a[0], a[1], q) == expected
    for k, a in [((2, -1, 1), (1, 2, 3)), ((1, 1, 1), (2, 3, 5)), ((-3, 2, 1), (2, 4, 6))]:
        for q in range(-2, 40):
            expected = sum(power_product(k, x) * multinomial(x) for x in nonneg_solutions(a, q))
            assert triple_family_weight(k, a, q) == expected


def test_direct_count_examples():
    assert direct_count(Explicit((1, 2)), 4) == 5
    assert direct_count(Explicit((2, 3)), 7) == 3
    assert direct_count(Explicit((5,)), 4) == 0
    assert direct_count(Explicit((5,)), 0) == 1


def test_direct_count_needs_finite_set():
    with pytest.raises(UnsupportedInputError):
        direct_count(Residue(1, 2), 5)
    with pytest.raises(UnsupportedInputError):
        direct_count(Range(2), 5)


@pytest.mark.parametrize("spec", [b for b in BATTERY if parse_set(b).is_finite()])
def test_direct_count_matches_oracle(spec):
    s = parse_set(spec)
    for n in range(29):
        assert direct_count(s, n) == count_brute(s, n)
