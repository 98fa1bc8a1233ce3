import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from geodetic.graph_core import relabel
from geodetic.moore import build_base
from geodetic.symmetry import automorphism_group, edge_permutation


@pytest.mark.parametrize("name, order", [("petersen", 120), ("k4", 24), ("c5", 10), ("k5", 120)])
def test_group_order(name, order):
    g = build_base(name)
    group = automorphism_group(g)
    assert len(group) == order
    h = nx.Graph(g.edges)
    assert sum(1 for _ in GraphMatcher(h, h).isomorphisms_iter()) == order


def test_group_elements_are_automorphisms():
    g = build_base("petersen")
    group = automorphism_group(g)
    assert all(relabel(g, p) == g for p in group)
    assert len(set(group)) == len(group)
    # vertex transitive
    assert {p[0] for p in group} == set(range(10))


def test_edge_permutation_is_bijection():
    g = build_base("petersen")
    for p in automorphism_group(g)[:20]:
        ep = edge_permutation(g, p)
        assert sorted(ep) == list(range(15))
        for i, (u, v) in enumerate(g.edges):
            a, b = sorted((p[u], p[v]))
            assert g.edges[ep[i]] == (a, b)


def test_subdivided_graph_group():
    from geodetic.graph_core import subdivide

    g = subdivide(build_base("k4"), [2, 1, 1, 1, 1, 1])
    h = nx.Graph(g.edges)
    expected = sum(1 for _ in GraphMatcher(h, h).isomorphisms_iter())
    assert len(automorphism_group(g)) == expected
