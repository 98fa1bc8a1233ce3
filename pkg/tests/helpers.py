"""Shared test utilities."""

import itertools

from geodetic.graph_core import Graph


def random_connected(rng, n_max=12):
    """A random spanning tree on 2..n_max vertices plus random extra edges."""
    n = rng.randint(2, n_max)
    edges = {tuple(sorted((v, rng.randrange(v)))) for v in range(1, n)}
    p = rng.random() * 0.5
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < p:
            edges.add((u, v))
    return Graph(n, tuple(edges))
