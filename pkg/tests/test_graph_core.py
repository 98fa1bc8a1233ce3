import itertools
import json
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geodetic.graph_core import (
    CycleSkeleton,
    DisconnectedGraphError,
    Graph,
    GraphError,
    Skeleton,
    check_all_oracles,
    compute_metric,
    from_edges,
    is_geodetic_even_circuit,
    is_geodetic_neighborhood,
    is_geodetic_unique,
    relabel,
    skeleton,
    subdivide,
)
from geodetic.moore import build_base, complete_graph, cycle_graph
from geodetic.symmetry import automorphism_group, edge_permutation

from helpers import random_connected


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.vertex_count))
    h.add_edges_from(g.edges)
    return h


# -- construction -----------------------------------------------------------


def test_edges_are_normalised_and_sorted():
    g = Graph(3, ((2, 1), (1, 0)))
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "n, edges",
    [(2, ((0, 0),)), (2, ((0, 1), (1, 0))), (2, ((0, 5),))],
)
def test_bad_edges_rejected(n, edges):
    with pytest.raises(GraphError):
        Graph(n, edges)


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError):
        Graph(4, ((0, 1), (2, 3)))


def test_json_round_trip(petersen):
    text = petersen.to_json()
    assert json.loads(text) == {"vertex_count": 10, "edges": [list(e) for e in petersen.edges]}
    assert Graph.from_json(text) == petersen


@pytest.mark.parametrize("text", ["[]", "{}", '{"vertex_count": 2}', "not json"])
def test_malformed_json(text):
    with pytest.raises(GraphError):
        Graph.from_json(text)


# -- metric -----------------------------------------------------------------


@pytest.mark.parametrize(
    "name, d, g",
    [("petersen", 2, 5), ("k4", 1, 3), ("c5", 2, 5), ("hoffman_singleton", 2, 5)],
)
def test_metric_of_bases(name, d, g):
    m = compute_metric(build_base(name))
    assert (m.diameter, m.girth) == (d, g)


def test_c5_unique_geodesics():
    m = compute_metric(cycle_graph(5))
    assert all(c == 1 for row in m.geodesic_count for c in row)


def test_tree_has_infinite_girth():
    assert compute_metric(from_edges([(0, 1), (1, 2)])).girth == float("inf")


def test_metric_against_networkx():
    rng = random.Random(7)
    for _ in range(100):
        g = random_connected(rng)
        h = to_nx(g)
        m = compute_metric(g)
        ref = dict(nx.all_pairs_shortest_path_length(h))
        for u in range(g.vertex_count):
            for v in range(g.vertex_count):
                assert m.dist[u][v] == ref[u][v]
                if u != v:
                    n_paths = sum(1 for _ in nx.all_shortest_paths(h, u, v))
                    assert m.geodesic_count[u][v] == n_paths
        ref_girth = nx.girth(h)
        assert m.girth == ref_girth
        assert m.diameter == nx.diameter(h)


def test_triangle_inequality_and_symmetry():
    rng = random.Random(3)
    for _ in range(30):
        g = random_connected(rng, 9)
        d = compute_metric(g).dist
        n = g.vertex_count
        for a, b, c in itertools.product(range(n), repeat=3):
            assert d[a][b] == d[b][a]
            assert d[a][c] <= d[a][b] + d[b][c]


# -- oracles ----------------------------------------------------------------

C4 = cycle_graph(4)


def test_oracles_on_petersen(petersen):
    for rep in check_all_oracles(petersen).values():
        assert rep.is_geodetic and rep.witness is None


@pytest.mark.parametrize("n", range(1, 9))
def test_complete_graphs_geodetic(n):
    g = complete_graph(n) if n > 1 else Graph(1, ())
    assert all(check_all_oracles(g).values())


def test_c4_unique_witness():
    rep = is_geodetic_unique(C4)
    assert not rep
    assert rep.witness == (0, 2, 2)


def test_c4_even_circuit_witness():
    rep = is_geodetic_even_circuit(C4)
    assert not rep
    assert sorted(rep.witness) == [0, 1, 2, 3]
    assert len(rep.witness) == 4


def test_c4_neighborhood_witness():
    rep = is_geodetic_neighborhood(C4)
    assert not rep
    v, r, w = rep.witness
    assert r == 2 and compute_metric(C4).dist[v][w] == 2


def test_k4_even_circuit_true():
    assert is_geodetic_even_circuit(complete_graph(4))


def test_witness_deterministic():
    g = subdivide(complete_graph(4), (1, 1, 1, 3, 3, 3))
    a = {k: r.witness for k, r in check_all_oracles(g).items()}
    b = {k: r.witness for k, r in check_all_oracles(g).items()}
    assert a == b
    assert not any(check_all_oracles(g).values())


def test_k5_plesnik_two_plus_one_geodetic():
    weights = (2, 1, 0, 0, 0)
    lengths = [weights[u] + 1 + weights[v] for u, v in complete_graph(5).edges]
    g = subdivide(complete_graph(5), lengths)
    assert is_geodetic_neighborhood(g)


def test_oracles_agree_random():
    rng = random.Random(2024)
    seen = {True: 0, False: 0}
    for _ in range(400):
        g = random_connected(rng)
        votes = {r.is_geodetic for r in check_all_oracles(g).values()}
        assert len(votes) == 1
        seen[votes.pop()] += 1
    assert seen[True] > 0 and seen[False] > 0


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 12), st.data())
def test_odd_cycles_geodetic_even_not(n, data):
    g = cycle_graph(n)
    assert bool(is_geodetic_unique(g)) == (n % 2 == 1)
    assert bool(is_geodetic_even_circuit(g)) == (n % 2 == 1)


# -- subdivision and skeletons ----------------------------------------------


def test_subdivide_all_ones_is_identity(petersen):
    assert subdivide(petersen, [1] * 15) == petersen


def test_subdivide_numbering():
    g = subdivide(complete_graph(3), {(0, 1): 3, (0, 2): 1, (1, 2): 2})
    assert g.vertex_count == 6
    # fresh vertices 3, 4 on (0, 1), then 5 on (1, 2)
    assert g.has_edge(0, 3) and g.has_edge(3, 4) and g.has_edge(4, 1)
    assert g.has_edge(1, 5) and g.has_edge(5, 2)


@pytest.mark.parametrize("lengths", [[0, 1, 1], [1, 1], {(0, 1): 1}])
def test_subdivide_bad_lengths(lengths):
    with pytest.raises(GraphError):
        subdivide(complete_graph(3), lengths)


def test_subdivided_diameter_and_girth(petersen):
    m = compute_metric(subdivide(petersen, [1] * 15))
    assert (m.diameter, m.girth) == (2, 5)


def test_skeleton_k4_one_edge():
    k4 = complete_graph(4)
    sk = skeleton(subdivide(k4, [2, 1, 1, 1, 1, 1]))
    assert isinstance(sk, Skeleton)
    assert sk.graph == k4
    assert sorted(sk.lengths.values()) == [1, 1, 1, 1, 1, 2]


def test_skeleton_cycle():
    assert skeleton(cycle_graph(7)) == CycleSkeleton(7)


def test_skeleton_rejects_leaves():
    with pytest.raises(GraphError):
        skeleton(from_edges([(0, 1), (1, 2), (2, 0), (0, 3)]))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=15, max_size=15), st.integers(0, 119))
def test_skeleton_round_trip_petersen(w, pick):
    base = build_base("petersen")
    sk = skeleton(subdivide(base, w))
    # nodes keep their labels, so the round trip is exact here
    assert sk.graph == base
    assert [sk.lengths[e] for e in base.edges] == w
    # relabelling the subdivided graph gives the same weights up to automorphism
    group = automorphism_group(base)
    perm = group[pick]
    big = subdivide(base, w)
    full = list(perm) + list(range(10, big.vertex_count))
    sk2 = skeleton(relabel(big, full))
    ep = edge_permutation(base, perm)
    moved = [0] * 15
    for i, j in enumerate(ep):
        moved[j] = w[i]
    assert sk2.graph == base
    assert [sk2.lengths[e] for e in base.edges] == moved


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=6, max_size=6))
def test_skeleton_round_trip_k4(w):
    sk = skeleton(subdivide(complete_graph(4), w))
    assert [sk.lengths[e] for e in complete_graph(4).edges] == w
