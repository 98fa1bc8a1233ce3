"""Automorphism groups by colour refinement and backtracking."""

from __future__ import annotations

from collections import deque

from .graph_core import Graph, compute_metric, norm_edge


def refine_colors(g: Graph, dist) -> list[int]:
    """Stable colouring starting from (degree, distance profile)."""
    n = g.vertex_count
    init = [(g.degree(v), tuple(sorted(dist[v]))) for v in range(n)]
    keys = sorted(set(init))
    color = [keys.index(c) for c in init]
    while True:
        sig = [(color[v], tuple(sorted(color[y] for y in g.adjacency[v]))) for v in range(n)]
        keys = sorted(set(sig))
        new = [keys.index(s) for s in sig]
        if len(keys) == len(set(color)):
            return new
        color = new


def automorphism_group(g: Graph) -> list[tuple[int, ...]]:
    """Every automorphism as a tuple ``perm`` with ``perm[v]`` the image of v, sorted."""
    n = g.vertex_count
    if n == 0:
        return [()]
    dist = compute_metric(g).dist
    color = refine_colors(g, dist)
    # visit vertices in BFS order so each new vertex is constrained by a placed neighbour
    order = []
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        x = queue.popleft()
        order.append(x)
        for y in g.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                queue.append(y)
    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(color[v], []).append(v)

    image = [-1] * n
    used = [False] * n
    found = []

    def place(pos: int):
        if pos == n:
            found.append(tuple(image))
            return
        v = order[pos]
        for w in by_color[color[v]]:
            if used[w]:
                continue
            if any(dist[v][order[j]] != dist[w][image[order[j]]] for j in range(pos)):
                continue
            image[v] = w
            used[w] = True
            place(pos + 1)
            used[w] = False
            image[v] = -1

    place(0)
    found.sort()
    return found


def edge_permutation(g: Graph, perm) -> list[int]:
    """Index map on ``g.edges`` induced by the vertex permutation."""
    idx = g.edge_index
    return [idx[norm_edge(perm[u], perm[v])] for u, v in g.edges]
