"""Geodetic systems of linear Diophantine equations and their exact solution.

A system has one unknown per base edge (the length of the segment that
replaces it). Odd rows follow a fundamental circuit basis and must sum to
``2k_j + 1``; even rows follow every short even circuit of the base and must
all sum to ``2D + 2``, where ``D`` is the target diameter.
"""

from __future__ import annotations

import itertools
import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb, lcm
from typing import Iterator, Optional, Sequence

import numpy as np

from .circuit_space import bfs_spanning_tree, circuits_of_length, fundamental_basis
from .graph_core import Edge, Graph, GraphError, diameter, norm_edge
from .moore import complete_graph

log = logging.getLogger(__name__)


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class GeodeticSystem:
    base: Graph
    edge_order: tuple[Edge, ...]
    #: supports as sorted tuples of variable indices
    odd_rows: tuple[tuple[int, ...], ...]
    even_rows: tuple[tuple[int, ...], ...]
    #: length in the base of each odd row's circuit
    odd_min_len: tuple[int, ...]
    even_len: tuple[int, ...]
    base_diameter: int
    #: for K_n systems: block index of every odd row and of every even row
    odd_blocks: Optional[tuple[int, ...]] = None
    even_blocks: Optional[tuple[int, ...]] = None

    @property
    def variable_count(self) -> int:
        return len(self.edge_order)

    @property
    def row_count(self) -> int:
        return len(self.odd_rows) + len(self.even_rows)

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.odd_rows + self.even_rows

    def matrix(self) -> list[list[int]]:
        out = []
        for support in self.rows:
            row = [0] * self.variable_count
            for i in support:
                row[i] = 1
            out.append(row)
        return out

    def constant_terms(self, rhs: "RhsVector") -> list[int]:
        if len(rhs.k_values) != len(self.odd_rows):
            raise DimensionError(
                f"system has {len(self.odd_rows)} odd rows, RHS has {len(rhs.k_values)} values"
            )
        odd = [2 * k + 1 for k in rhs.k_values]
        if rhs.block_diameters is not None:
            if self.even_blocks is None:
                raise DimensionError("per-block diameters given for an unblocked system")
            even = [2 * rhs.block_diameters[b] + 2 for b in self.even_blocks]
        else:
            even = [2 * rhs.D + 2] * len(self.even_rows)
        return odd + even

    def residual(self, x: Sequence, rhs: "RhsVector") -> list:
        b = self.constant_terms(rhs)
        return [sum(x[i] for i in support) - bi for support, bi in zip(self.rows, b)]

    def k_range(self, j: int, D: int) -> range:
        """Admissible ``k_j`` for odd row ``j``: ``L_j <= 2k+1 <= 2D+1``."""
        return range((self.odd_min_len[j] - 1) // 2, D + 1)

    @cached_property
    def elimination(self) -> "Elimination":
        return Elimination(self.matrix())

    def to_json(self) -> str:
        rows = [
            {"support": list(s), "kind": "odd", "min_len": L}
            for s, L in zip(self.odd_rows, self.odd_min_len)
        ] + [
            {"support": list(s), "kind": "even", "min_len": L}
            for s, L in zip(self.even_rows, self.even_len)
        ]
        return json.dumps(
            {
                "variables": self.variable_count,
                "edges": [list(e) for e in self.edge_order],
                "rows": rows,
                "base_diameter": self.base_diameter,
            }
        )


@dataclass(frozen=True)
class RhsVector:
    k_values: tuple[int, ...]
    D: int
    block_diameters: Optional[tuple[int, ...]] = None

    def odd_terms(self) -> tuple[int, ...]:
        return tuple(2 * k + 1 for k in self.k_values)

    def is_admissible(self, sys: GeodeticSystem) -> bool:
        if len(self.k_values) != len(sys.odd_rows):
            return False
        if sys.odd_blocks is not None and self.block_diameters is not None:
            caps = [self.block_diameters[b] for b in sys.odd_blocks]
        else:
            caps = [self.D] * len(self.k_values)
        return all(
            L <= 2 * k + 1 <= 2 * cap + 1
            for L, k, cap in zip(sys.odd_min_len, self.k_values, caps)
        )


@dataclass(frozen=True)
class SolveOutcome:
    tag: str  # "unique" | "inconsistent" | "underdetermined"
    solution: Optional[tuple[Fraction, ...]] = None
    natural: bool = False
    kernel_rank: int = 0


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def _support(edge_index, circuit) -> tuple[int, ...]:
    return tuple(sorted(edge_index[e] for e in circuit.edges))


def build_moore_system(base: Graph, root: int = 0) -> GeodeticSystem:
    """Odd rows from the BFS-tree fundamental basis, even rows from all even
    circuits of length 4, 6, ..., 2d + 2."""
    d = diameter(base)
    basis = fundamental_basis(base, bfs_spanning_tree(base, root))
    idx = base.edge_index
    odd_rows, odd_len = [], []
    for c in basis.circuits:
        if len(c) % 2 == 0:
            raise GraphError(
                f"fundamental circuit {c.vertices} is even; base needs an odd basis"
            )
        odd_rows.append(_support(idx, c))
        odd_len.append(len(c))
    even_rows, even_len = [], []
    for L in range(4, min(2 * d + 2, base.vertex_count) + 1, 2):
        for c in circuits_of_length(base, L):
            even_rows.append(_support(idx, c))
            even_len.append(L)
    return GeodeticSystem(
        base,
        base.edges,
        tuple(odd_rows),
        tuple(even_rows),
        tuple(odd_len),
        tuple(even_len),
        d,
    )


def kn_row_count(n: int) -> int:
    """Closed form for the number of equations in the K_n system."""
    a = (n - 1) * (n - 2)
    return (a * a - 2 * a) // 4


def build_kn_system(n: int) -> GeodeticSystem:
    """Stack one K4 system per 4-subset of K_n's vertices."""
    if n < 4:
        raise ValueError("K_n systems need n >= 4")
    kn = complete_graph(n)
    k4 = build_moore_system(complete_graph(4))
    idx = kn.edge_index
    odd_rows, even_rows, odd_blocks, even_blocks = [], [], [], []
    for b, quad in enumerate(itertools.combinations(range(n), 4)):
        local = [idx[norm_edge(quad[u], quad[v])] for u, v in k4.edge_order]
        for s in k4.odd_rows:
            odd_rows.append(tuple(sorted(local[i] for i in s)))
            odd_blocks.append(b)
        for s in k4.even_rows:
            even_rows.append(tuple(sorted(local[i] for i in s)))
            even_blocks.append(b)
    return GeodeticSystem(
        kn,
        kn.edges,
        tuple(odd_rows),
        tuple(even_rows),
        (3,) * len(odd_rows),
        (4,) * len(even_rows),
        1,
        tuple(odd_blocks),
        tuple(even_blocks),
    )


def kn_rhs_for(sys: GeodeticSystem, lengths: Sequence[int]) -> Optional[RhsVector]:
    """RHS under which ``lengths`` solves a K_n system, or None if none exists."""
    if sys.even_blocks is None:
        raise ValueError("not a K_n system")
    nblocks = max(sys.even_blocks) + 1
    block_d: list[Optional[int]] = [None] * nblocks
    for support, b in zip(sys.even_rows, sys.even_blocks):
        s = sum(lengths[i] for i in support)
        if s % 2 or s < 4:
            return None
        dm = (s - 2) // 2
        if block_d[b] is None:
            block_d[b] = dm
        elif block_d[b] != dm:
            return None
    ks = []
    for support, b in zip(sys.odd_rows, sys.odd_blocks):
        s = sum(lengths[i] for i in support)
        if s % 2 == 0:
            return None
        ks.append((s - 1) // 2)
    rhs = RhsVector(tuple(ks), max(block_d), tuple(block_d))
    return rhs if rhs.is_admissible(sys) else None


# ---------------------------------------------------------------------------
# exact solving
# ---------------------------------------------------------------------------


class Elimination:
    """Reduced row echelon form ``R = E A`` over the rationals, with ``E`` kept."""

    def __init__(self, a: list[list[int]]):
        m = len(a)
        n = len(a[0]) if a else 0
        r = [[Fraction(v) for v in row] for row in a]
        e = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        pivots = []
        prow = 0
        for col in range(n):
            piv = next((i for i in range(prow, m) if r[i][col] != 0), None)
            if piv is None:
                continue
            r[prow], r[piv] = r[piv], r[prow]
            e[prow], e[piv] = e[piv], e[prow]
            f = r[prow][col]
            if f != 1:
                r[prow] = [v / f for v in r[prow]]
                e[prow] = [v / f for v in e[prow]]
            for i in range(m):
                if i != prow and r[i][col] != 0:
                    g = r[i][col]
                    r[i] = [v - g * w for v, w in zip(r[i], r[prow])]
                    e[i] = [v - g * w for v, w in zip(e[i], e[prow])]
            pivots.append(col)
            prow += 1
            if prow == m:
                break
        self.rows = m
        self.cols = n
        self.reduced = r
        self.transform = e
        self.pivots = tuple(pivots)
        self.rank = len(pivots)
        self.free = tuple(c for c in range(n) if c not in set(pivots))

    def apply(self, b: Sequence[int]) -> list[Fraction]:
        return [sum(ev * bv for ev, bv in zip(row, b) if ev) for row in self.transform]


def solve_exact(sys: GeodeticSystem, rhs: RhsVector) -> SolveOutcome:
    b = sys.constant_terms(rhs)
    el = sys.elimination
    c = el.apply(b)
    if any(v != 0 for v in c[el.rank :]):
        return SolveOutcome("inconsistent")
    x = [Fraction(0)] * el.cols
    for i, col in enumerate(el.pivots):
        x[col] = c[i]
    if el.rank < el.cols:
        return SolveOutcome("underdetermined", tuple(x), False, el.cols - el.rank)
    natural = all(v.denominator == 1 and v > 0 for v in x)
    return SolveOutcome("unique", tuple(x), natural, 0)


def variable_bounds(sys: GeodeticSystem, b: Sequence[int]) -> list[int]:
    """Upper bound on each variable from positivity of the other terms in its rows."""
    ub = [None] * sys.variable_count
    for support, bi in zip(sys.rows, b):
        cap = bi - (len(support) - 1)
        for i in support:
            ub[i] = cap if ub[i] is None else min(ub[i], cap)
    return [u if u is not None else 0 for u in ub]


def natural_solutions(sys: GeodeticSystem, rhs: RhsVector) -> list[tuple[int, ...]]:
    """All positive-integer solutions for one RHS, in lexicographic order.

    Unique systems need one solve; otherwise the free variables are swept
    over their positivity boxes and pivot variables are back-substituted.
    """
    out = solve_exact(sys, rhs)
    if out.tag == "inconsistent":
        return []
    if out.tag == "unique":
        return [tuple(int(v) for v in out.solution)] if out.natural else []
    log.info("underdetermined system (kernel rank %d): sweeping lattice box", out.kernel_rank)
    b = sys.constant_terms(rhs)
    el = sys.elimination
    c = el.apply(b)
    ub = variable_bounds(sys, b)
    found = []
    boxes = [range(1, ub[f] + 1) for f in el.free]
    for free_vals in itertools.product(*boxes):
        x = [0] * el.cols
        for f, v in zip(el.free, free_vals):
            x[f] = v
        ok = True
        for i, col in enumerate(el.pivots):
            val = c[i] - sum(el.reduced[i][f] * v for f, v in zip(el.free, free_vals))
            if val.denominator != 1 or val < 1:
                ok = False
                break
            x[col] = int(val)
        if ok:
            found.append(tuple(x))
    found.sort()
    return found


class BatchSolver:
    """Solve one full-rank system for many constant vectors at once.

    ``E`` is scaled to an integer matrix by the lcm of its denominators, so a
    solve is an integer matrix product followed by exact divisibility tests.
    """

    def __init__(self, sys: GeodeticSystem):
        el = sys.elimination
        if el.rank != el.cols:
            raise ValueError("batch solving needs a full-column-rank system")
        self.sys = sys
        self.scale = lcm(*(v.denominator for row in el.transform for v in row))
        self.solve_rows = np.array(
            [[int(v * self.scale) for v in el.transform[i]] for i in range(el.rank)],
            dtype=object,
        )
        self.check_rows = np.array(
            [[int(v * self.scale) for v in row] for row in el.transform[el.rank :]],
            dtype=object,
        ).reshape(el.rows - el.rank, el.rows)
        self.pivots = el.pivots
        self.max_entry = max((abs(int(v)) for v in self.solve_rows.flat), default=0)

    def _matrix(self, rows: np.ndarray, b: np.ndarray) -> np.ndarray:
        bound = self.max_entry * int(b.max(initial=0)) * rows.shape[1]
        if bound < 2**62:
            return rows.astype(np.int64) @ b.astype(np.int64)
        return rows @ b.astype(object)

    def solve(self, constants: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """``constants`` has one column per RHS. Returns (natural mask, solutions)."""
        num = self._matrix(self.solve_rows, constants)
        consistent = np.ones(constants.shape[1], dtype=bool)
        if self.check_rows.shape[0]:
            consistent = ~np.any(self._matrix(self.check_rows, constants) != 0, axis=0)
        integral = np.all(num % self.scale == 0, axis=0)
        x = num // self.scale
        positive = np.all(x > 0, axis=0)
        sol = np.empty_like(x)
        sol[list(self.pivots), :] = x
        return consistent & integral & positive, sol


def rank(sys: GeodeticSystem) -> int:
    return sys.elimination.rank


def kn_blocks(n: int) -> int:
    return comb(n, 4)
