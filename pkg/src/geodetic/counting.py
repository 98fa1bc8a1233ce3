"""Partition numbers, multinomials and the closed-form graph counts."""

from __future__ import annotations

import csv
import io
from functools import lru_cache
from math import comb, factorial, prod


@lru_cache(maxsize=None)
def partition_count(k: int, i: int) -> int:
    """p_k(i): partitions of ``i`` into exactly ``k`` positive parts.

    Uses p_k(i) = p_k(i-k) + p_{k-1}(i-k) + ... + p_1(i-k) with p_k(i) = 0
    for i < k and p_k(k) = 1.
    """
    if k < 1 or i < 0:
        raise ValueError("need k >= 1 and i >= 0")
    if i < k:
        return 0
    if i == k:
        return 1
    return sum(partition_count(j, i - k) for j in range(1, k + 1))


def partition_table(max_k: int, max_i: int) -> list[list[int]]:
    return [[partition_count(k, i) for i in range(1, max_i + 1)] for k in range(1, max_k + 1)]


def partition_table_csv(max_k: int, max_i: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k"] + list(range(1, max_i + 1)))
    for k, row in enumerate(partition_table(max_k, max_i), start=1):
        w.writerow([k] + row)
    return buf.getvalue()


def multinomial(r) -> int:
    r = list(r)
    if any(x < 0 for x in r):
        raise ValueError("multiplicities must be non-negative")
    return factorial(sum(r)) // prod(factorial(x) for x in r)


def stars_and_bars(n_total: int, m_parts: int) -> int:
    """Number of ways to write ``n_total`` as an ordered sum of ``m_parts`` non-negative integers."""
    if n_total < 0 or m_parts < 1:
        raise ValueError("need n_total >= 0 and m_parts >= 1")
    return comb(n_total + m_parts - 1, m_parts - 1)


def surjection_count(n: int, t: int) -> int:
    """Ordered n-tuples using every one of t given values (t! S(n, t))."""
    return sum((-1) ** j * comb(t, j) * (t - j) ** n for j in range(t + 1))


def group_permutation_total(m: int, t: int, values: int) -> int:
    """Permutations of all collections with exactly ``t`` distinct values drawn
    from ``values`` admissible ones."""
    return surjection_count(m, t) * comb(values, t)


FAMILIES = ("kn", "k4", "petersen_conjecture")


def closed_form_counts(family: str, **params) -> tuple[int, int]:
    """(non-isomorphic, labelled) counts.

    ``kn``: n, i -> (p_n(i+n), C(i+n-1, n-1)).
    ``k4``: d -> (p_4(d+3), C(d+2, 3)).
    ``petersen_conjecture``: d -> (p_6(d+4), C(d+3, 5)); a conjecture, only
    checked against enumeration at small d.
    """
    family = family.replace("-", "_")
    if family == "kn":
        n, i = params["n"], params["i"]
        return partition_count(n, i + n), comb(i + n - 1, n - 1)
    if family == "k4":
        d = params["d"]
        return partition_count(4, d + 3), comb(d + 2, 3)
    if family == "petersen_conjecture":
        d = params["d"]
        return partition_count(6, d + 4), comb(d + 3, 5)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def is_conjecture(family: str) -> bool:
    return family.replace("-", "_") == "petersen_conjecture"
