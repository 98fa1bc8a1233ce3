"""Spanning trees, fundamental circuit bases and fixed-length circuit enumeration."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph_core import Edge, Graph, GraphError, norm_edge


@dataclass(frozen=True, order=True)
class Circuit:
    """A simple closed walk, stored in canonical form.

    The canonical vertex sequence starts at the smallest vertex and runs in
    the direction whose second vertex is the smaller neighbour.
    """

    vertices: tuple[int, ...]

    @classmethod
    def canonical(cls, seq) -> "Circuit":
        seq = list(seq)
        i = seq.index(min(seq))
        seq = seq[i:] + seq[:i]
        if len(seq) > 2 and seq[-1] < seq[1]:
            seq = [seq[0]] + seq[:0:-1]
        return cls(tuple(seq))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edges(self) -> frozenset[Edge]:
        vs = self.vertices
        return frozenset(norm_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))

    def opposite_pairs(self) -> list[tuple[int, int]]:
        if len(self) % 2:
            return []
        half = len(self) // 2
        return [(self.vertices[i], self.vertices[i + half]) for i in range(half)]


@dataclass(frozen=True)
class CircuitBasis:
    tree: frozenset[Edge]
    #: non-tree edges in sorted order, one per circuit
    chords: tuple[Edge, ...]
    circuits: tuple[Circuit, ...]

    @property
    def size(self) -> int:
        return len(self.circuits)


def bfs_spanning_tree(g: Graph, root: int = 0) -> frozenset[Edge]:
    if not 0 <= root < g.vertex_count:
        raise GraphError(f"invalid root {root}")
    seen = {root}
    tree = set()
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                tree.add(norm_edge(x, y))
                queue.append(y)
    return frozenset(tree)


def _tree_parents(g: Graph, tree: frozenset[Edge]) -> tuple[list[int], list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in tree:
        adj[u].append(v)
        adj[v].append(u)
    parent = [-1] * g.vertex_count
    depth = [-1] * g.vertex_count
    depth[0] = 0
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if depth[y] < 0:
                depth[y] = depth[x] + 1
                parent[y] = x
                stack.append(y)
    return parent, depth


def tree_path(parent, depth, u: int, v: int) -> list[int]:
    left, right = [u], [v]
    while u != v:
        if depth[u] >= depth[v]:
            u = parent[u]
            left.append(u)
        else:
            v = parent[v]
            right.append(v)
    return left + right[-2::-1]


def fundamental_basis(g: Graph, tree) -> CircuitBasis:
    tree = frozenset(norm_edge(*e) for e in tree)
    if not tree <= set(g.edges) or len(tree) != g.vertex_count - 1:
        raise GraphError("tree is not a spanning tree of the graph")
    parent, depth = _tree_parents(g, tree)
    if min(depth, default=0) < 0:
        raise GraphError("tree is not a spanning tree of the graph")
    chords = tuple(e for e in g.edges if e not in tree)
    circuits = tuple(Circuit.canonical(tree_path(parent, depth, u, v)) for u, v in chords)
    return CircuitBasis(tree, chords, circuits)


def circuits_of_length(g: Graph, length: int) -> list[Circuit]:
    """All simple circuits with exactly ``length`` edges, sorted, each once."""
    if length < 3:
        raise ValueError("circuits have length >= 3")
    adj = g.adjacency
    n = g.vertex_count
    found = []
    on_path = [False] * n
    for s in range(n):
        path = [s]
        on_path[s] = True
        stack = [iter(adj[s])]
        while stack:
            y = next(stack[-1], None)
            if y is None:
                stack.pop()
                on_path[path.pop()] = False
                continue
            if y <= s or on_path[y]:
                continue
            if len(path) == length - 1:
                if s in adj[y] and path[1] < y:
                    found.append(Circuit(tuple(path) + (y,)))
                continue
            path.append(y)
            on_path[y] = True
            stack.append(iter(adj[y]))
    found.sort()
    return found


def count_circuits_of_length(g: Graph, length: int) -> int:
    return len(circuits_of_length(g, length))
