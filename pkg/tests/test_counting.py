import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geodetic.counting import (
    closed_form_counts,
    group_permutation_total,
    is_conjecture,
    multinomial,
    partition_count,
    partition_table,
    partition_table_csv,
    stars_and_bars,
    surjection_count,
)
from geodetic.plesnik import plesnik_assignments

# published table of p_k(i), rows k = 1..10, columns i = 1..15
TABLE_1 = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7],
    [0, 0, 1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14, 16, 19],
    [0, 0, 0, 1, 1, 2, 3, 5, 6, 9, 11, 15, 18, 23, 27],
    [0, 0, 0, 0, 1, 1, 2, 3, 5, 7, 10, 13, 18, 23, 30],
    [0, 0, 0, 0, 0, 1, 1, 2, 3, 5, 7, 11, 14, 20, 26],
    [0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 5, 7, 11, 15, 21],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 5, 7, 11, 15],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 5, 7, 11],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 5, 7],
]


def brute_partitions(k, i):
    return sum(
        1 for c in itertools.combinations_with_replacement(range(1, i + 1), k) if sum(c) == i
    )


def test_table_1():
    assert partition_table(10, 15) == TABLE_1


@pytest.mark.parametrize("k", range(1, 7))
def test_against_brute_force(k):
    for i in range(1, 19):
        assert partition_count(k, i) == brute_partitions(k, i)


@pytest.mark.parametrize("k, i, p", [(3, 9, 7), (2, 5, 2), (4, 6, 2), (5, 8, 3)])
def test_known_values(k, i, p):
    assert partition_count(k, i) == p


def test_diagonal():
    assert all(partition_count(k, k) == 1 for k in range(1, 40))


def test_cumulative_identity():
    for k in range(1, 31):
        for i in range(1, 31):
            assert sum(partition_count(j, i) for j in range(1, k + 1)) == partition_count(k, i + k)


def test_big_values_exact():
    # p(200) split by number of parts sums to the partition number of 200
    assert sum(partition_count(k, 200) for k in range(1, 201)) == 3972999029388


def test_csv():
    lines = partition_table_csv(10, 15).splitlines()
    assert lines[0] == "k," + ",".join(str(i) for i in range(1, 16))
    assert lines[3] == "3,0,0,1,1,2,3,4,5,7,8,10,12,14,16,19"


@pytest.mark.parametrize("r, value", [((2, 4), 15), ((6,), 1), ((1,) * 6, 720), ((1, 5), 6)])
def test_multinomial(r, value):
    assert multinomial(r) == value


def test_stars_and_bars():
    assert stars_and_bars(3, 5) == 35
    brute = sum(1 for c in itertools.product(range(4), repeat=5) if sum(c) == 3)
    assert brute == 35
    assert all(stars_and_bars(0, m) == 1 for m in range(1, 8))


@given(st.integers(0, 6), st.integers(1, 6))
def test_stars_and_bars_matches_assignments(i, n):
    assert stars_and_bars(i, n) == len(plesnik_assignments(n, i, labeled=True))


def test_surjections():
    assert [surjection_count(6, t) for t in range(1, 7)] == [1, 62, 540, 1560, 1800, 720]


@pytest.mark.parametrize("D", range(2, 10))
def test_group_totals_sum(D):
    v = D - 1
    totals = [group_permutation_total(6, t, v) for t in range(1, 7)]
    assert sum(totals) == v**6
    assert totals == [c * comb(v, t) for t, c in enumerate([1, 62, 540, 1560, 1800, 720], 1)]


def test_group_totals_d7():
    assert [group_permutation_total(6, t, 6) for t in range(1, 7)] == [6, 930, 10800, 23400, 10800, 720]


def test_closed_forms():
    assert closed_form_counts("k4", d=3) == (2, 10)
    assert closed_form_counts("petersen_conjecture", d=6) == (5, 126)
    assert closed_form_counts("kn", n=5, i=3) == (3, 35)
    assert closed_form_counts("petersen-conjecture", d=2) == (1, 1)
    assert is_conjecture("petersen_conjecture") and not is_conjecture("k4")
    with pytest.raises(ValueError):
        closed_form_counts("heawood", d=2)


def test_conjecture_series():
    got = [closed_form_counts("petersen_conjecture", d=d) for d in range(2, 8)]
    assert [a for a, _ in got] == [1, 1, 2, 3, 5, 7]
    assert [b for _, b in got] == [1, 6, 21, 56, 126, 252]
