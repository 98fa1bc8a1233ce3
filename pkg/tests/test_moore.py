import time

import networkx as nx
import pytest

from geodetic.circuit_space import count_circuits_of_length
from geodetic.graph_core import compute_metric
from geodetic.moore import (
    UndecidedMooreGraphError,
    build_base,
    moore_order,
    moore_params,
    theorem6_counts,
)


@pytest.mark.parametrize("k, d, n", [(3, 2, 10), (7, 2, 50), (2, 2, 5), (5, 1, 6), (9, 1, 10)])
def test_moore_order(k, d, n):
    assert moore_order(k, d) == n


@pytest.mark.parametrize("name", ["c5", "k4", "k5", "petersen", "hoffman_singleton"])
def test_base_invariants(name):
    g = build_base(name)
    k, d = moore_params(name)
    assert g.vertex_count == moore_order(k, d)
    assert all(g.degree(v) == k for v in range(g.vertex_count))
    m = compute_metric(g)
    assert (m.diameter, m.girth) == (d, 2 * d + 1)


def test_petersen_shape():
    g = build_base("petersen")
    assert (g.vertex_count, g.edge_count) == (10, 15)
    assert nx.is_isomorphic(nx.Graph(g.edges), nx.petersen_graph())


def test_k4_tree_form():
    g = build_base("k4")
    assert (g.vertex_count, g.edge_count) == (4, 6)
    # root 0 is adjacent to the three leaves; S is the triangle 1-2-3
    assert all(g.has_edge(0, v) for v in (1, 2, 3))


def test_hoffman_singleton():
    t0 = time.perf_counter()
    g = build_base("hoffman_singleton")
    assert time.perf_counter() - t0 < 60
    assert (g.vertex_count, g.edge_count) == (50, 175)
    h = nx.Graph(g.edges)
    assert nx.is_isomorphic(h, nx.hoffman_singleton_graph())


def test_kn_names():
    g = build_base("k7")
    assert (g.vertex_count, g.edge_count) == (7, 21)


def test_undecided_57():
    with pytest.raises(UndecidedMooreGraphError):
        build_base("moore57")


def test_unknown_name():
    with pytest.raises(ValueError):
        build_base("heawood")


def test_deterministic_json():
    assert build_base("hoffman_singleton").to_json() == build_base("hoffman_singleton").to_json()


@pytest.mark.parametrize(
    "k, d, expected", [(3, 1, (4, 3)), (3, 2, (12, 10)), (7, 2, (1260, 5250)), (4, 1, (10, 15))]
)
def test_circuit_formula_values(k, d, expected):
    assert theorem6_counts(k, d) == expected


@pytest.mark.parametrize("name", ["k4", "k5", "petersen", "hoffman_singleton"])
def test_circuit_formula_brute_force(name):
    g = build_base(name)
    k, d = moore_params(name)
    odd, even = theorem6_counts(k, d)
    assert count_circuits_of_length(g, 2 * d + 1) == odd
    assert count_circuits_of_length(g, 2 * d + 2) == even


def test_circuit_formula_needs_k3():
    with pytest.raises(ValueError):
        theorem6_counts(2, 2)
