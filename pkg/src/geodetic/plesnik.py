"""Plesnik graphs K_n^i and segment-level geodeticity conditions.

A Plesnik assignment gives each node r of K_n a weight i_r >= 0 and makes
the segment between nodes r and s of length i_r + 1 + i_s.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .circuit_space import circuits_of_length
from .graph_core import Graph, GraphError, Skeleton, compute_metric, skeleton, subdivide
from .moore import complete_graph, moore_order


@dataclass(frozen=True)
class PlesnikAssignment:
    values: tuple[int, ...]
    labeled: bool = True

    @property
    def n(self) -> int:
        return len(self.values)

    def segment_length(self, r: int, s: int) -> int:
        return self.values[r] + 1 + self.values[s]

    def lengths(self) -> tuple[int, ...]:
        """Segment lengths in the edge order of :func:`complete_graph`."""
        return tuple(self.segment_length(u, v) for u, v in complete_graph(self.n).edges)


def build_plesnik(n: int, assignment) -> Graph:
    values = tuple(assignment.values if isinstance(assignment, PlesnikAssignment) else assignment)
    if len(values) != n:
        raise ValueError(f"{len(values)} Plesnik numbers for {n} nodes")
    if n < 3:
        raise ValueError("Plesnik graphs need n >= 3")
    if any(v < 0 for v in values):
        raise ValueError(f"negative Plesnik number in {values}")
    return subdivide(complete_graph(n), PlesnikAssignment(values).lengths())


def _partitions(i: int, max_parts: int, max_part: int):
    if i == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(i, max_part), 0, -1):
        for rest in _partitions(i - first, max_parts - 1, first):
            yield (first,) + rest


def _compositions(i: int, n: int):
    if n == 1:
        yield (i,)
        return
    for first in range(i, -1, -1):
        for rest in _compositions(i - first, n - 1):
            yield (first,) + rest


def plesnik_assignments(n: int, i: int, labeled: bool) -> list[PlesnikAssignment]:
    """Unlabelled: partitions of ``i`` into at most ``n`` parts, zero-padded to
    ``n`` nodes. Labelled: compositions of ``i`` into ``n`` non-negative parts."""
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    if labeled:
        return [PlesnikAssignment(c, True) for c in _compositions(i, n)]
    return [
        PlesnikAssignment(p + (0,) * (n - len(p)), False) for p in _partitions(i, n, i)
    ]


def plesnik_numbers(lengths_by_edge: dict, n: int) -> Optional[tuple[int, ...]]:
    """Recover Plesnik numbers from K_n segment lengths, or None if there are none.

    Uses i_r = (|S(r,s)| + |S(r,t)| - |S(s,t)| - 1) / 2 for any two other nodes.
    """
    if n < 3:
        raise ValueError("need n >= 3")

    def seg(a, b):
        return lengths_by_edge[(a, b) if a < b else (b, a)]

    values = []
    for r in range(n):
        s, t = [x for x in range(n) if x != r][:2]
        num = seg(r, s) + seg(r, t) - seg(s, t) - 1
        if num % 2 or num < 0:
            return None
        values.append(num // 2)
    a = PlesnikAssignment(tuple(values))
    if any(seg(u, v) != a.segment_length(u, v) for u, v in itertools.combinations(range(n), 2)):
        return None
    return tuple(values)


# ---------------------------------------------------------------------------
# condition checkers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConditionReport:
    """Three segment-level conditions, each with its first counterexample."""

    segments_geodesic: bool
    small_circuits_odd: bool
    large_circuits_equal: bool
    counterexamples: dict = field(default_factory=dict)

    @property
    def all_true(self) -> bool:
        return self.segments_geodesic and self.small_circuits_odd and self.large_circuits_equal


def _weighted(sk: Skeleton, circuit) -> int:
    return sum(sk.lengths[e] for e in circuit.edges)


def _skeleton_paths(base: Graph, k: int):
    """Simple paths with exactly ``k`` edges, each once (start < end)."""
    adj = base.adjacency

    def walk(path):
        if len(path) == k + 1:
            if path[0] < path[-1]:
                yield tuple(path)
            return
        for y in adj[path[-1]]:
            if y not in path:
                yield from walk(path + [y])

    for s in range(base.vertex_count):
        yield from walk([s])


def _evaluate(g: Graph, sk: Skeleton, path_segments: int, small: int, large: int) -> ConditionReport:
    dist = compute_metric(g).dist
    cex = {}
    geo = True
    for path in _skeleton_paths(sk.graph, path_segments):
        w = sum(sk.lengths[(min(a, b), max(a, b))] for a, b in zip(path, path[1:]))
        if w != dist[sk.nodes[path[0]]][sk.nodes[path[-1]]]:
            geo = False
            cex["segments_geodesic"] = path
            break
    odd = True
    for c in circuits_of_length(sk.graph, small):
        if _weighted(sk, c) % 2 == 0:
            odd = False
            cex["small_circuits_odd"] = c.vertices
            break
    equal = True
    lengths = {}
    for c in circuits_of_length(sk.graph, large):
        lengths.setdefault(_weighted(sk, c), c.vertices)
        if len(lengths) > 1:
            equal = False
            cex["large_circuits_equal"] = tuple(lengths.values())
            break
    return ConditionReport(geo, odd, equal, cex)


def check_theorem2(g: Graph) -> ConditionReport:
    """Segment conditions for a K4 homeomorph; all three hold iff ``g`` is geodetic."""
    sk = skeleton(g)
    if not isinstance(sk, Skeleton) or sk.graph != complete_graph(4):
        raise GraphError("skeleton of the graph is not K4")
    return _evaluate(g, sk, 1, 3, 4)


def is_moore_graph(g: Graph, d: int) -> bool:
    n = g.vertex_count
    if n == 0:
        return False
    k = g.degree(0)
    if k < 2 or any(g.degree(v) != k for v in range(n)):
        return False
    if n != moore_order(k, d):
        return False
    m = compute_metric(g)
    return m.diameter == d and m.girth == 2 * d + 1


def check_moore_conditions(g: Graph, base_d: int) -> ConditionReport:
    """Sufficient conditions for a homeomorph of a Moore graph of diameter ``base_d``:
    every path of ``base_d`` segments is a geodesic, every circuit of
    ``2 base_d + 1`` segments is odd, every circuit of ``2 base_d + 2``
    segments has the same length."""
    sk = skeleton(g)
    if not isinstance(sk, Skeleton) or not is_moore_graph(sk.graph, base_d):
        raise GraphError(f"skeleton is not a Moore graph of diameter {base_d}")
    return _evaluate(g, sk, base_d, 2 * base_d + 1, 2 * base_d + 2)
