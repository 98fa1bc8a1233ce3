"""Graphs, hop metrics, subdivision and the geodeticity oracles.

Three independent tests of geodeticity live here:

* :func:`is_geodetic_unique` counts shortest paths between every pair;
* :func:`is_geodetic_even_circuit` looks for an even circuit with a pair of
  opposite vertices at distance half the circuit length;
* :func:`is_geodetic_neighborhood` checks that, from every root, each vertex
  at level ``r >= 2`` has exactly one neighbour one level up.

They are meant to be cross-checked against each other, so none of them calls
another.
"""

from __future__ import annotations

import json
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional, Union

Edge = tuple[int, int]

#: girth reported for forests
INFINITE = float("inf")


class GraphError(ValueError):
    """Invalid graph data."""


class DisconnectedGraphError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: no path between {u} and {v}")
        self.u = u
        self.v = v


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple connected graph on vertices ``0 .. vertex_count-1``.

    ``edges`` is normalised to a sorted tuple of ``(u, v)`` pairs with
    ``u < v``.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise GraphError("vertex_count must be non-negative")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {tuple(e)} has a vertex outside [0, {n})")
            e = norm_edge(u, v)
            if e in seen:
                raise GraphError(f"multiple edge {e}")
            seen.add(e)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        if n > 1:
            dist = _bfs(self.adjacency, 0)
            for v in range(n):
                if dist[v] < 0:
                    raise DisconnectedGraphError(0, v)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edge_index

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def to_json(self) -> str:
        return json.dumps(
            {"vertex_count": self.vertex_count, "edges": [list(e) for e in self.edges]}
        )

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        try:
            data = json.loads(text)
            return cls(int(data["vertex_count"]), tuple(tuple(e) for e in data["edges"]))
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc


def _bfs(adj, root: int) -> list[int]:
    dist = [-1] * len(adj)
    dist[root] = 0
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


# ---------------------------------------------------------------------------
# metric
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MetricData:
    dist: tuple[tuple[int, ...], ...]
    geodesic_count: tuple[tuple[int, ...], ...]
    diameter: int
    girth: Union[int, float]


def bfs_counts(g: Graph, root: int) -> tuple[list[int], list[int]]:
    """Hop distances from ``root`` and the number of shortest paths to each vertex."""
    adj = g.adjacency
    dist = [-1] * g.vertex_count
    count = [0] * g.vertex_count
    dist[root] = 0
    count[root] = 1
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
            if dist[y] == dist[x] + 1:
                count[y] += count[x]
    return dist, count


def girth(g: Graph) -> Union[int, float]:
    best = INFINITE
    adj = g.adjacency
    for root in range(g.vertex_count):
        dist = [-1] * g.vertex_count
        parent = [-1] * g.vertex_count
        dist[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


def compute_metric(g: Graph) -> MetricData:
    dist_rows = []
    count_rows = []
    for v in range(g.vertex_count):
        dist, count = bfs_counts(g, v)
        for w, d in enumerate(dist):
            if d < 0:
                raise DisconnectedGraphError(v, w)
        dist_rows.append(tuple(dist))
        count_rows.append(tuple(count))
    diameter = max((max(r) for r in dist_rows), default=0)
    return MetricData(tuple(dist_rows), tuple(count_rows), diameter, girth(g))


def diameter(g: Graph) -> int:
    return max((max(_bfs(g.adjacency, v)) for v in range(g.vertex_count)), default=0)


# ---------------------------------------------------------------------------
# geodeticity oracles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeodeticityReport:
    is_geodetic: bool
    method: str
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.is_geodetic


def is_geodetic_unique(g: Graph) -> GeodeticityReport:
    for u in range(g.vertex_count):
        dist, count = bfs_counts(g, u)
        for v in range(u + 1, g.vertex_count):
            if dist[v] < 0:
                raise DisconnectedGraphError(u, v)
            if count[v] != 1:
                return GeodeticityReport(False, "unique", (u, v, count[v]))
    return GeodeticityReport(True, "unique")


def _violating_even_circuit(g: Graph, dist, length: int) -> Optional[tuple[int, ...]]:
    """An even circuit of ``length`` with an opposite pair ``(u, w)`` at
    distance ``length / 2``, or None.

    Both arcs from ``u`` to its opposite vertex are then geodesics, so the
    walk from ``u`` must stay at distance ``min(l, length - l)`` from ``u``
    after ``l`` steps; that is the pruning rule.
    """
    adj = g.adjacency
    n = g.vertex_count
    for u in range(n):
        du = dist[u]
        path = [u]
        on_path = [False] * n
        on_path[u] = True

        def extend():
            cur = path[-1]
            steps = len(path) - 1
            if steps == length - 1:
                return tuple(path) if u in adj[cur] else None
            nxt = steps + 1
            want = min(nxt, length - nxt)
            for y in adj[cur]:
                if on_path[y] or du[y] != want:
                    continue
                path.append(y)
                on_path[y] = True
                found = extend()
                path.pop()
                on_path[y] = False
                if found is not None:
                    return found
            return None

        found = extend()
        if found is not None:
            return found
    return None


def _canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    seq = list(seq)
    i = seq.index(min(seq))
    seq = seq[i:] + seq[:i]
    if len(seq) > 2 and seq[-1] < seq[1]:
        seq = [seq[0]] + seq[:0:-1]
    return tuple(seq)


def is_geodetic_even_circuit(g: Graph) -> GeodeticityReport:
    """Geodetic iff no even circuit C has an opposite pair at distance |C|/2.

    The witness is the circuit in canonical form (smallest vertex first).
    """
    metric = compute_metric(g)
    bound = min(2 * metric.diameter + 2, g.vertex_count)
    for length in range(4, bound + 1, 2):
        circuit = _violating_even_circuit(g, metric.dist, length)
        if circuit is not None:
            return GeodeticityReport(False, "even-circuit", _canonical_cycle(circuit))
    return GeodeticityReport(True, "even-circuit")


def is_geodetic_neighborhood(g: Graph) -> GeodeticityReport:
    adj = g.adjacency
    for v in range(g.vertex_count):
        dist = _bfs(adj, v)
        for w in range(g.vertex_count):
            if dist[w] < 0:
                raise DisconnectedGraphError(v, w)
        order = sorted(range(g.vertex_count), key=lambda w: (dist[w], w))
        for w in order:
            r = dist[w]
            if r < 2:
                continue
            up = [y for y in adj[w] if dist[y] == r - 1]
            if len(up) != 1:
                return GeodeticityReport(False, "neighborhood", (v, r, w))
    return GeodeticityReport(True, "neighborhood")


ORACLES = {
    "unique": is_geodetic_unique,
    "even-circuit": is_geodetic_even_circuit,
    "neighborhood": is_geodetic_neighborhood,
}


def check_all_oracles(g: Graph) -> dict[str, GeodeticityReport]:
    return {name: oracle(g) for name, oracle in ORACLES.items()}


# ---------------------------------------------------------------------------
# subdivision and skeleton
# ---------------------------------------------------------------------------


def _lengths_by_edge(g: Graph, lengths) -> dict[Edge, int]:
    if isinstance(lengths, Mapping):
        out = {}
        for e in g.edges:
            a = lengths.get(e, lengths.get((e[1], e[0])))
            if a is None:
                raise GraphError(f"missing length for edge {e}")
            out[e] = a
    else:
        lengths = list(lengths)
        if len(lengths) != g.edge_count:
            raise GraphError(
                f"expected {g.edge_count} edge lengths, got {len(lengths)}"
            )
        out = dict(zip(g.edges, lengths))
    for e, a in out.items():
        if int(a) != a or a < 1:
            raise GraphError(f"edge {e} has non-positive or non-integral length {a}")
    return {e: int(a) for e, a in out.items()}


def subdivide(g: Graph, lengths: Union[Mapping[Edge, int], Sequence[int]]) -> Graph:
    """Replace each edge of length ``a`` by a path with ``a - 1`` new vertices.

    ``lengths`` is either a mapping keyed by edge or a sequence aligned with
    ``g.edges``. New vertices are numbered after the original ones, edge by
    edge in sorted edge order.
    """
    by_edge = _lengths_by_edge(g, lengths)
    nxt = g.vertex_count
    edges = []
    for u, v in g.edges:
        prev = u
        for _ in range(by_edge[(u, v)] - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return Graph(nxt, tuple(edges))


class Skeleton(NamedTuple):
    graph: Graph
    lengths: dict[Edge, int]
    #: skeleton vertex i is vertex nodes[i] of the original graph
    nodes: tuple[int, ...]


class CycleSkeleton(NamedTuple):
    """Outcome of :func:`skeleton` on a graph that is a single circuit."""

    length: int


def segments(g: Graph) -> list[tuple[int, int, tuple[int, ...]]]:
    """Every segment as ``(start_node, end_node, vertex path)``, each once."""
    nodes = [v for v in range(g.vertex_count) if g.degree(v) >= 3]
    is_node = [g.degree(v) >= 3 for v in range(g.vertex_count)]
    adj = g.adjacency
    used: set[Edge] = set()
    out = []
    for a in nodes:
        for first in adj[a]:
            if norm_edge(a, first) in used:
                continue
            path = [a, first]
            used.add(norm_edge(a, first))
            while not is_node[path[-1]]:
                cur = path[-1]
                if len(adj[cur]) == 1:
                    raise GraphError(f"vertex {cur} has degree 1")
                y = adj[cur][0] if adj[cur][0] != path[-2] else adj[cur][1]
                used.add(norm_edge(cur, y))
                path.append(y)
            out.append((path[0], path[-1], tuple(path)))
    return out


def skeleton(g: Graph) -> Union[Skeleton, CycleSkeleton]:
    """Contract every maximal chain of degree-2 vertices into one weighted edge."""
    for v in range(g.vertex_count):
        if g.degree(v) < 2:
            raise GraphError(f"vertex {v} has degree {g.degree(v)}; skeleton needs degree >= 2")
    nodes = tuple(v for v in range(g.vertex_count) if g.degree(v) >= 3)
    if not nodes:
        return CycleSkeleton(g.vertex_count)
    index = {v: i for i, v in enumerate(nodes)}
    lengths: dict[Edge, int] = {}
    for a, b, path in segments(g):
        if a == b:
            raise GraphError(f"segment {path} is a loop; skeleton is not simple")
        e = norm_edge(index[a], index[b])
        if e in lengths:
            raise GraphError(f"parallel segments between {a} and {b}; skeleton is not simple")
        lengths[e] = len(path) - 1
    base = Graph(len(nodes), tuple(lengths))
    return Skeleton(base, {e: lengths[e] for e in base.edges}, nodes)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph(g.vertex_count, tuple(norm_edge(perm[u], perm[v]) for u, v in g.edges))


def is_biconnected(g: Graph) -> bool:
    """Diagnostic only: vertex connectivity > 1."""
    n = g.vertex_count
    if n < 3:
        return n == 2 and g.edge_count == 1
    for cut in range(n):
        rest = [v for v in range(n) if v != cut]
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if y != cut and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != n - 1:
            return False
    return True


def from_edges(edges: Iterable[Edge], vertex_count: Optional[int] = None) -> Graph:
    edges = [tuple(e) for e in edges]
    if vertex_count is None:
        vertex_count = 1 + max((max(e) for e in edges), default=-1)
    return Graph(vertex_count, tuple(edges))
