from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cdindex.andre import (
    EnumerationLimit,
    andre_permutations,
    andre_type_counts,
    cd_type,
    descents,
    has_double_descent,
    is_andre_direct,
    is_andre_recursive,
    phi_check_via_andre,
    phi_row_via_andre,
)
from cdindex.ncpoly import parse_poly

from oracles import andre_by_definition

# André permutations of [n] are counted by the Euler numbers E_{n+1}
EULER_UP = {1: 1, 2: 2, 3: 5, 4: 16, 5: 61, 6: 272, 7: 1385}

perms = st.integers(1, 8).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


def test_descents():
    assert descents((2, 1, 4, 3)) == {1, 3}
    assert descents((1, 2, 3)) == set()


def test_double_descent():
    assert has_double_descent((3, 2, 1))
    assert not has_double_descent((2, 1, 3))


def test_s3_members():
    assert set(andre_permutations(3)) == {(1, 2, 3), (2, 1, 3), (3, 1, 2), (1, 3, 2), (2, 3, 1)}


def test_s3_rejects_decreasing():
    assert not is_andre_direct((3, 2, 1))


@pytest.mark.parametrize("n", sorted(EULER_UP))
def test_counts_are_euler_numbers(n):
    assert sum(1 for _ in andre_permutations(n)) == EULER_UP[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_enumeration_matches_definition(n):
    expected = [p for p in permutations(range(1, n + 1)) if andre_by_definition(p)]
    assert list(andre_permutations(n)) == expected


@given(perms)
def test_direct_matches_definition(perm):
    assert is_andre_direct(perm) == andre_by_definition(perm)


@given(perms)
def test_recursive_matches_direct(perm):
    assert is_andre_recursive(perm) == is_andre_direct(perm)


def test_minimum_last_rule():
    # the prefix 423 is André, yet the pair j=2, j'=4 has no witness below 1
    assert not andre_by_definition((4, 2, 3, 1))
    assert not is_andre_recursive((4, 2, 3, 1))
    assert is_andre_recursive((2, 3, 1))


def test_cd_types():
    assert cd_type((2, 1, 4, 3)) == "dd"
    assert cd_type((1, 2, 3)) == "ccc"
    assert cd_type((2, 3, 1)) == "cd"
    assert cd_type((2, 1, 3)) == "dc"
    assert cd_type((1,)) == "c"


@given(perms)
def test_cd_type_degree(perm):
    w = cd_type(perm)
    assert w.count("c") + 2 * w.count("d") == len(perm)


def test_type_counts_n3():
    assert andre_type_counts(3) == {"ccc": 1, "cd": 2, "dc": 2}


def test_type_counts_respect_last():
    assert andre_type_counts(3, last=3) == {"ccc": 1, "dc": 1}


def test_limit_enforced():
    with pytest.raises(EnumerationLimit):
        andre_type_counts(10)
    with pytest.raises(EnumerationLimit):
        phi_row_via_andre(12, limit=11)


def test_phi_check_4_0():
    assert phi_check_via_andre(4, 0) == parse_poly("1*cccc + 2*cdc + 2*dcc", "cd")


def test_phi_check_5_4():
    assert phi_check_via_andre(5, 4) == parse_poly("1*cccd + 2*cdd + 2*dcd", "cd")


def test_phi_check_rejects_bad_index():
    with pytest.raises(ValueError):
        phi_check_via_andre(4, 4)


@pytest.mark.parametrize("n", range(2, 7))
def test_row_matches_single_queries(n):
    assert phi_row_via_andre(n) == [phi_check_via_andre(n, j) for j in range(n)]
