"""Base graphs written as a BFS tree plus leftover edges, and Moore-graph formulas."""

from __future__ import annotations

import re
from collections import deque
from fractions import Fraction

from .graph_core import Graph, GraphError, norm_edge, relabel

MOORE_PARAMS = {
    "c5": (2, 2),
    "k4": (3, 1),
    "k5": (4, 1),
    "petersen": (3, 2),
    "hoffman_singleton": (7, 2),
}


class UndecidedMooreGraphError(GraphError):
    pass


def moore_order(k: int, d: int) -> int:
    """Moore bound ``1 + k * sum_{i=1..d} (k-1)^(i-1)``."""
    if k < 2 or d < 1:
        raise ValueError("need k >= 2 and d >= 1")
    return 1 + k * sum((k - 1) ** (i - 1) for i in range(1, d + 1))


def theorem6_counts(k: int, d: int) -> tuple[int, int]:
    """Numbers of circuits of length 2d+1 and 2d+2 in a Moore graph of type (k, d)."""
    if k < 3:
        raise ValueError("circuit-count formula needs k >= 3 (it divides by k - 2)")
    if d < 1:
        raise ValueError("d must be >= 1")
    t = k * (k - 1) ** d
    odd = Fraction(t * (t - 2), 2 * (2 * d + 1) * (k - 2))
    even = Fraction(t * (t - 2), 2 * (2 * d + 2))
    if odd.denominator != 1 or even.denominator != 1:
        raise ArithmeticError(f"non-integral circuit counts for ({k}, {d}): {odd}, {even}")
    return int(odd), int(even)


def bfs_order(g: Graph, root: int = 0) -> list[int]:
    """Permutation sending each vertex to its position in BFS order from ``root``.

    Children are visited in ascending order of their current label.
    """
    seen = [False] * g.vertex_count
    seen[root] = True
    order = [root]
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                order.append(y)
                queue.append(y)
    perm = [0] * g.vertex_count
    for pos, v in enumerate(order):
        perm[v] = pos
    return perm


def canonical_bfs(g: Graph, root: int = 0) -> Graph:
    return relabel(g, bfs_order(g, root))


def _tree_plus_s(children: list[list[int]], s_edges) -> Graph:
    edges = [(p, c) for p, cs in enumerate(children) for c in cs]
    edges += [norm_edge(u, v) for u, v in s_edges]
    n = 1 + sum(len(cs) for cs in children)
    return Graph(n, tuple(edges))


def complete_graph(n: int) -> Graph:
    """K_n as the star T(n-1, 1) plus every edge among the leaves."""
    if n < 1:
        raise GraphError("K_n needs n >= 1")
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple(norm_edge(i, (i + 1) % n) for i in range(n)))


def petersen() -> Graph:
    # T(3,2): 0 -> 1,2,3; 1 -> 4,5; 2 -> 6,7; 3 -> 8,9.  S is the hexagon 4-6-9-5-7-8.
    children = [[1, 2, 3], [4, 5], [6, 7], [8, 9]] + [[] for _ in range(6)]
    s = [(4, 6), (6, 9), (9, 5), (5, 7), (7, 8), (8, 4)]
    return _tree_plus_s(children, s)


def c5() -> Graph:
    # T(2,2): 0 -> 1,2; 1 -> 3; 2 -> 4; S = {3-4}
    return _tree_plus_s([[1, 2], [3], [4], [], []], [(3, 4)])


def hoffman_singleton() -> Graph:
    """Robertson's pentagons-and-pentagrams construction, relabelled in BFS order."""
    def p(h, j):
        return 5 * h + j

    def q(i, j):
        return 25 + 5 * i + j

    edges = []
    for h in range(5):
        for j in range(5):
            edges.append(norm_edge(p(h, j), p(h, (j + 1) % 5)))
            edges.append(norm_edge(q(h, j), q(h, (j + 2) % 5)))
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append(norm_edge(p(h, j), q(i, (h * i + j) % 5)))
    return canonical_bfs(Graph(50, tuple(edges)))


_KN = re.compile(r"k(\d+)$")


def build_base(name: str) -> Graph:
    """Named base graph in BFS-level numbering from vertex 0.

    ``name`` is one of ``c5``, ``k4``, ``k5``, ``kN`` (N >= 3), ``petersen``,
    ``hoffman_singleton``.
    """
    key = name.lower().replace("-", "_")
    if key in ("k57", "moore57", "moore_57") or "57" in key and "moore" in key:
        raise UndecidedMooreGraphError(
            "existence of a Moore graph of degree 57 and diameter 2 is undecided"
        )
    if key == "petersen":
        return petersen()
    if key == "c5":
        return c5()
    if key in ("hoffman_singleton", "hs"):
        return hoffman_singleton()
    m = _KN.match(key)
    if m:
        n = int(m.group(1))
        if n < 3:
            raise GraphError("complete base graphs need n >= 3")
        return complete_graph(n)
    raise GraphError(f"unknown base graph {name!r}")


def moore_params(name: str) -> tuple[int, int]:
    key = name.lower().replace("-", "_")
    if key == "hs":
        key = "hoffman_singleton"
    if key in MOORE_PARAMS:
        return MOORE_PARAMS[key]
    m = _KN.match(key)
    if m:
        return int(m.group(1)) - 1, 1
    raise GraphError(f"unknown base graph {name!r}")
