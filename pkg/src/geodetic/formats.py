"""CSV, JSON and DOT output for enumeration results."""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .enumeration import CollectionRow, OrbitClass, SolutionRecord
from .graph_core import Graph


def _fmt_girth(g) -> str:
    return "inf" if g == float("inf") else str(int(g))


def solutions_csv(records: Sequence[SolutionRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if not records:
        w.writerow(["diameter", "girth", "orbit_id"])
        return buf.getvalue()
    m = len(records[0].rhs.k_values)
    e = len(records[0].lengths)
    w.writerow(
        [f"k_{j + 1}" for j in range(m)]
        + [f"x_{i + 1}" for i in range(e)]
        + ["diameter", "girth", "orbit_id"]
    )
    for r in records:
        w.writerow(list(r.rhs.k_values) + list(r.lengths) + [r.diameter, _fmt_girth(r.girth), r.orbit_id])
    return buf.getvalue()


def solutions_json(records: Sequence[SolutionRecord]) -> str:
    rows = [
        {
            "row": i + 1,
            "k": list(r.rhs.k_values),
            "D": r.rhs.D,
            "x": list(r.lengths),
            "diameter": r.diameter,
            "girth": _fmt_girth(r.girth),
            "orbit_id": r.orbit_id,
        }
        for i, r in enumerate(records)
    ]
    return json.dumps(rows, indent=1) + "\n"


def id_ranges(ids: Sequence[int]) -> str:
    """``[1,2,3,7]`` -> ``"1-3 7"`` (ids are 1-based row numbers)."""
    out = []
    ids = sorted(ids)
    i = 0
    while i < len(ids):
        j = i
        while j + 1 < len(ids) and ids[j + 1] == ids[j] + 1:
            j += 1
        out.append(str(ids[i]) if i == j else f"{ids[i]}-{ids[j]}")
        i = j + 1
    return " ".join(out)


def collections_csv(rows: Sequence[CollectionRow]) -> str:
    """One line per collection, laid out like the per-diameter tables."""
    group_totals: dict[int, int] = {}
    for r in rows:
        group_totals[r.collection.group] = group_totals.get(r.collection.group, 0) + r.solutions
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["group", "collection", "C_m", "sum_C_m", "solutions", "complete", "d_g", "rows"])
    for r in rows:
        c = r.collection
        w.writerow(
            [
                c.group_label,
                " ".join(map(str, c.values)),
                c.permutations,
                group_totals[c.group],
                r.solutions,
                "yes" if r.complete else "no",
                " ".join(f"({d},{_fmt_girth(g)})" for d, g in r.diameter_girth),
                id_ranges([i + 1 for i in r.record_ids]),
            ]
        )
    return buf.getvalue()


def orbits_csv(orbits: Sequence[OrbitClass], records: Sequence[SolutionRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["orbit_id", "members", "diameter", "girth", "collection", "representative"])
    for o in orbits:
        first = records[o.record_indices[0]]
        w.writerow(
            [
                o.orbit_id,
                o.members,
                first.diameter,
                _fmt_girth(first.girth),
                " ".join(map(str, first.collection)),
                " ".join(map(str, o.representative)),
            ]
        )
    return buf.getvalue()


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f'  {v} [label="{v}"];' for v in range(g.vertex_count)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
