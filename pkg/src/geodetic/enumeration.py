"""Enumerate the geodetic graphs of a given diameter homeomorphic to a base graph.

For a target diameter ``D`` every admissible odd-row RHS is solved, natural
solutions are turned into subdivided graphs, each graph is checked by all
three geodeticity oracles, and the results are grouped into isomorphism
classes under the base graph's automorphisms.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterator, Optional, Sequence

import numpy as np

from .counting import multinomial
from .dioph import (
    BatchSolver,
    GeodeticSystem,
    RhsVector,
    build_moore_system,
    natural_solutions,
)
from .graph_core import Graph, check_all_oracles, compute_metric, subdivide
from .symmetry import automorphism_group, edge_permutation

log = logging.getLogger(__name__)

ROMAN = ["", "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"]


class ConsistencyError(RuntimeError):
    """A result contradicts what the construction guarantees."""


@dataclass(frozen=True)
class CollectionGroup:
    values: tuple[int, ...]
    multiplicities: tuple[int, ...]
    permutations: int

    @property
    def group(self) -> int:
        return len(self.multiplicities)

    @property
    def group_label(self) -> str:
        t = self.group
        return ROMAN[t] if t < len(ROMAN) else str(t)


@dataclass(frozen=True)
class SolutionRecord:
    rhs: RhsVector
    lengths: tuple[int, ...]
    diameter: int
    girth: int
    orbit_id: int = -1
    base: Optional[Graph] = field(default=None, compare=False, repr=False)

    @property
    def collection(self) -> tuple[int, ...]:
        return tuple(sorted(self.rhs.odd_terms()))

    def graph(self) -> Graph:
        return subdivide(self.base, self.lengths)


@dataclass(frozen=True)
class OrbitClass:
    orbit_id: int
    representative: tuple[int, ...]
    members: int
    record_indices: tuple[int, ...] = ()


def admissible_values(L: int, D: int) -> list[int]:
    """Odd constant terms allowed for a row of base length ``L``."""
    return list(range(L, 2 * D + 2, 2))


def collection_of(values: Sequence[int]) -> CollectionGroup:
    counts = Counter(values)
    mult = tuple(counts[v] for v in sorted(counts))
    return CollectionGroup(tuple(sorted(values)), mult, multinomial(mult))


def collections_table(m: int, D: int, L: int = 5) -> list[CollectionGroup]:
    """Every multiset of ``m`` admissible odd values, ordered by group then values."""
    values = admissible_values(L, D)
    if m < 1 or not values:
        raise ValueError("need m >= 1 and a non-empty value range")
    out = [collection_of(c) for c in itertools.combinations_with_replacement(values, m)]
    out.sort(key=lambda c: (c.group, c.values))
    return out


def rhs_tuples(sys: GeodeticSystem, D: int) -> Iterator[RhsVector]:
    """All admissible RHS vectors for diameter ``D``, lexicographic in k."""
    if D < sys.base_diameter:
        raise ValueError(f"D = {D} is below the base diameter {sys.base_diameter}")
    ranges = [sys.k_range(j, D) for j in range(len(sys.odd_rows))]
    for ks in itertools.product(*ranges):
        yield RhsVector(ks, D)


def rhs_tuple_count(sys: GeodeticSystem, D: int) -> int:
    total = 1
    for j in range(len(sys.odd_rows)):
        total *= len(sys.k_range(j, D))
    return total


def _natural_pairs(sys: GeodeticSystem, D: int, chunk: int = 20000):
    """(rhs, lengths) for every natural solution, in RHS order."""
    el = sys.elimination
    if el.rank == el.cols:
        solver = BatchSolver(sys)
        it = rhs_tuples(sys, D)
        while True:
            block = list(itertools.islice(it, chunk))
            if not block:
                break
            b = np.array([sys.constant_terms(r) for r in block], dtype=np.int64).T
            mask, sol = solver.solve(b)
            for i in np.flatnonzero(mask):
                yield block[i], tuple(int(v) for v in sol[:, i])
    else:
        log.info("base system has rank %d < %d; using lattice sweep", el.rank, el.cols)
        for rhs in rhs_tuples(sys, D):
            for x in natural_solutions(sys, rhs):
                yield rhs, x


def _verify(args) -> tuple[int, int, dict]:
    base, lengths = args
    g = subdivide(base, lengths)
    reports = check_all_oracles(g)
    m = compute_metric(g)
    return m.diameter, m.girth, {k: r.is_geodetic for k, r in reports.items()}


@dataclass
class EnumerationResult:
    records: list[SolutionRecord]
    #: natural solutions whose graph failed geodeticity (non-strict runs only)
    rejected: list[tuple[RhsVector, tuple[int, ...]]]
    tuples: int
    orbits: list[OrbitClass]

    @property
    def natural_count(self) -> int:
        return len(self.records) + len(self.rejected)


def run_enumeration(
    base: Graph,
    D: int,
    root: int = 0,
    jobs: int = 1,
    system: Optional[GeodeticSystem] = None,
    strict: Optional[bool] = None,
) -> EnumerationResult:
    """Solve every admissible RHS for diameter ``D`` and verify each natural solution.

    With ``strict`` a natural solution whose graph is not geodetic raises
    :class:`ConsistencyError`; otherwise it is set aside in ``rejected``.
    The default is strict for bases of diameter >= 2 only: for complete
    graphs the odd-row bounds admit solutions with a negative node weight
    (e.g. K4 lengths (1,1,1,3,3,3) at D = 3), which are not geodetic.
    """
    sys = system if system is not None else build_moore_system(base, root)
    if D < sys.base_diameter:
        raise ValueError(f"D = {D} is below the base diameter {sys.base_diameter}")
    if strict is None:
        strict = sys.base_diameter >= 2
    pairs = list(_natural_pairs(sys, D))
    if len({x for _, x in pairs}) != len(pairs):
        raise ConsistencyError("two RHS vectors produced the same length vector")
    work = [(base, x) for _, x in pairs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            checked = list(pool.map(_verify, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        checked = [_verify(w) for w in work]
    records, rejected = [], []
    for (rhs, x), (diam, gir, verdicts) in zip(pairs, checked):
        votes = set(verdicts.values())
        if len(votes) > 1:
            raise ConsistencyError(f"geodeticity oracles disagree on lengths {x}: {verdicts}")
        if not votes.pop():
            if strict:
                raise ConsistencyError(
                    f"natural solution {x} for RHS {rhs.odd_terms()} is not geodetic"
                )
            log.debug("rejecting non-geodetic natural solution %s (RHS %s)", x, rhs.odd_terms())
            rejected.append((rhs, x))
            continue
        records.append(SolutionRecord(rhs, x, diam, gir, base=base))
    if rejected:
        log.warning("D=%d: %d natural solutions were not geodetic and were rejected", D, len(rejected))
    orbits = []
    if records:
        orbits = dedup_orbits(base, records)
        ids = {}
        for o in orbits:
            for i in o.record_indices:
                ids[i] = o.orbit_id
        records = [replace(r, orbit_id=ids[i]) for i, r in enumerate(records)]
    return EnumerationResult(records, rejected, rhs_tuple_count(sys, D), orbits)


def enumerate_homeomorphs(
    base: Graph,
    D: int,
    root: int = 0,
    jobs: int = 1,
    system: Optional[GeodeticSystem] = None,
    strict: Optional[bool] = None,
) -> list[SolutionRecord]:
    """Verified geodetic homeomorphs of ``base`` with target diameter ``D``, in RHS order."""
    return run_enumeration(base, D, root, jobs, system, strict).records


def dedup_orbits(
    base: Graph, records: Sequence[SolutionRecord], group=None
) -> list[OrbitClass]:
    """Group length vectors into orbits of the base automorphism group."""
    for r in records:
        if r.base is not None and r.base != base:
            raise ValueError("records come from different base graphs")
        if len(r.lengths) != base.edge_count:
            raise ValueError("record length vector does not match the base graph")
    if group is None:
        group = automorphism_group(base)
    edge_perms = [edge_permutation(base, p) for p in group]

    def canon(w):
        best = None
        for ep in edge_perms:
            img = [0] * len(w)
            for i, j in enumerate(ep):
                img[j] = w[i]
            img = tuple(img)
            if best is None or img < best:
                best = img
        return best

    cache: dict[tuple[int, ...], tuple[int, ...]] = {}
    members: dict[tuple[int, ...], list[int]] = {}
    for i, r in enumerate(records):
        rep = cache.get(r.lengths)
        if rep is None:
            rep = canon(r.lengths)
            cache[r.lengths] = rep
        members.setdefault(rep, []).append(i)
    return [
        OrbitClass(oid, rep, len(idx), tuple(idx))
        for oid, (rep, idx) in enumerate(sorted(members.items()))
    ]


@dataclass(frozen=True)
class CollectionRow:
    """One row of a per-diameter summary: a collection and what it produced."""

    collection: CollectionGroup
    solutions: int
    diameter_girth: tuple[tuple[int, int], ...]
    record_ids: tuple[int, ...]

    @property
    def complete(self) -> bool:
        """Every permutation of the collection gave a natural solution."""
        return self.solutions == self.collection.permutations


def collection_summary(records: Sequence[SolutionRecord]) -> list[CollectionRow]:
    by_coll: dict[tuple[int, ...], list[int]] = {}
    for i, r in enumerate(records):
        by_coll.setdefault(r.collection, []).append(i)
    rows = []
    for values, idx in by_coll.items():
        dg = tuple(sorted({(records[i].diameter, records[i].girth) for i in idx}))
        rows.append(CollectionRow(collection_of(values), len(idx), dg, tuple(idx)))
    rows.sort(key=lambda r: (r.collection.group, r.collection.values))
    return rows
