"""Command-line interface.

Subcommands
-----------
build    write a base graph (or a Plesnik graph) as Graph JSON
system   write the geodetic Diophantine system of a base graph as JSON
enum     enumerate geodetic homeomorphs for one target diameter
verify   run the geodeticity oracles on a Graph JSON file
orbits   print isomorphism classes of an enumeration
count    closed-form counts (partition table, K4, K_n, Petersen, collections)
export   convert Graph JSON to DOT

Exit codes: 0 success, 1 usage error, 2 input error, 3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path

from . import __version__
from .counting import (
    closed_form_counts,
    group_permutation_total,
    partition_table,
    partition_table_csv,
)
from .dioph import build_kn_system, build_moore_system
from .enumeration import (
    ConsistencyError,
    collection_summary,
    collections_table,
    rhs_tuple_count,
    run_enumeration,
)
from .formats import collections_csv, orbits_csv, solutions_csv, solutions_json, to_dot
from .graph_core import ORACLES, Graph, GraphError, subdivide
from .moore import build_base
from .plesnik import build_plesnik

log = logging.getLogger("geodetic")

EXIT_USAGE, EXIT_INPUT, EXIT_INTERNAL = 1, 2, 3
ENUM_BASES = ("k4", "c5", "petersen")
#: default cap on RHS tuples; (12 - 1)^6 is the Petersen system at D = 12
MAX_TUPLES = 11**6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"3"`` -> [3]; ``"2..7"`` -> [2..7]; ``"1,4,5"`` -> [1, 4, 5]."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(t) for t in text.split(",")]


def _write(path, text: str):
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_graph(path) -> Graph:
    try:
        text = sys.stdin.read() if str(path) == "-" else Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc}") from exc
    return Graph.from_json(text)


def _manifest(out_dir: Path, command: str, params: dict, outputs, counts: dict, t0: float):
    data = {
        "command": command,
        "parameters": params,
        "tool_version": __version__,
        "outputs": sorted(str(p) for p in outputs),
        "wall_time_s": round(time.perf_counter() - t0, 3),
        "result_counts": counts,
    }
    path = out_dir / "manifest.json"
    path.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    return path


# ---------------------------------------------------------------------------


def cmd_build(args) -> int:
    if args.plesnik:
        values = [int(v) for v in args.plesnik.split(",")]
        g = build_plesnik(len(values), values)
    else:
        g = build_base(args.base)
    _write(args.out, g.to_json() + "\n")
    return 0


def cmd_system(args) -> int:
    if args.kn:
        sys_ = build_kn_system(args.kn)
    else:
        sys_ = build_moore_system(build_base(args.base), args.root)
    _write(args.out, sys_.to_json() + "\n")
    log.info(
        "%d equations in %d unknowns (%d odd, %d even)",
        sys_.row_count, sys_.variable_count, len(sys_.odd_rows), len(sys_.even_rows),
    )
    return 0


def cmd_enum(args) -> int:
    t0 = time.perf_counter()
    base_name = args.base.lower()
    if base_name not in ENUM_BASES:
        raise UsageError(f"enum supports bases {', '.join(ENUM_BASES)}; got {args.base!r}")
    base = build_base(base_name)
    system = build_moore_system(base, args.root)
    if args.diameter < system.base_diameter:
        raise UsageError(
            f"diameter {args.diameter} is below the base diameter {system.base_diameter}"
        )
    n_tuples = rhs_tuple_count(system, args.diameter)
    if n_tuples > MAX_TUPLES and not args.max_tuples_override:
        raise UsageError(
            f"{n_tuples} RHS tuples exceed the cap of {MAX_TUPLES}; "
            "pass --max-tuples-override to run anyway"
        )
    jobs = args.jobs or os.cpu_count() or 1
    result = run_enumeration(base, args.diameter, args.root, jobs, system)
    records = result.records
    rows = collection_summary(records)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if args.format == "json":
        p = out / "solutions.json"
        p.write_text(solutions_json(records))
    else:
        p = out / "solutions.csv"
        p.write_text(solutions_csv(records))
    written.append(p)
    p = out / "collections.csv"
    p.write_text(collections_csv(rows))
    written.append(p)
    p = out / "orbits.csv"
    p.write_text(orbits_csv(result.orbits, records))
    written.append(p)
    if not args.no_figure and rows:
        from .plotting import plot_collection_summary

        written.append(plot_collection_summary(rows, args.diameter, out / "collections.png"))
    if args.dot_dir:
        dot_dir = Path(args.dot_dir)
        dot_dir.mkdir(parents=True, exist_ok=True)
        for i, r in enumerate(records, start=1):
            g = subdivide(base, r.lengths)
            (dot_dir / f"sol_{i:05d}.dot").write_text(to_dot(g, f"sol_{i}"))
            (dot_dir / f"sol_{i:05d}.json").write_text(g.to_json() + "\n")
        written.append(dot_dir)
    counts = {
        "rhs_tuples": result.tuples,
        "natural_solutions": result.natural_count,
        "records": len(records),
        "rejected_non_geodetic": len(result.rejected),
        "orbits": len(result.orbits),
    }
    params = {
        "base": base_name,
        "diameter": args.diameter,
        "root": args.root,
        "format": args.format,
        "dot_dir": args.dot_dir,
    }
    _manifest(out, "enum", params, written, counts, t0)

    print(f"base {base_name}, D = {args.diameter}: {len(records)} geodetic graphs, "
          f"{len(result.orbits)} isomorphism classes, {result.tuples} RHS tuples solved")
    if result.rejected:
        print(f"  {len(result.rejected)} natural solutions rejected as non-geodetic")
    for r in rows:
        c = r.collection
        dg = " ".join(f"({d},{g})" for d, g in r.diameter_girth)
        print(f"  {c.group_label:>4}  {' '.join(map(str, c.values)):<28} "
              f"C={c.permutations:<5} found={r.solutions:<5} {dg}")
    return 0


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    methods = list(ORACLES) if args.method == "all" else [args.method]
    verdicts = {}
    for m in methods:
        rep = ORACLES[m](g)
        verdicts[m] = rep.is_geodetic
        status = "geodetic" if rep.is_geodetic else "not geodetic"
        line = f"{m}: {status}"
        if rep.witness is not None:
            line += f"  witness={list(rep.witness)}"
        print(line)
    if len(set(verdicts.values())) > 1:
        print("oracles disagree", file=sys.stderr)
        return EXIT_INTERNAL
    if args.method == "all":
        from .graph_core import compute_metric

        m = compute_metric(g)
        print(f"diameter {m.diameter}, girth {m.girth if m.girth != float('inf') else 'inf'}")
        print("oracles agree")
    return 0


def cmd_orbits(args) -> int:
    base_name = args.base.lower()
    if base_name not in ENUM_BASES:
        raise UsageError(f"orbits supports bases {', '.join(ENUM_BASES)}; got {args.base!r}")
    base = build_base(base_name)
    result = run_enumeration(base, args.diameter, args.root, args.jobs or 1)
    _write(args.out, orbits_csv(result.orbits, result.records))
    return 0


def cmd_count(args) -> int:
    fam = args.family
    lines = []
    figure_series = None
    if fam == "partitions":
        text = partition_table_csv(args.max_k, args.max_i)
        _write(args.out, text)
        if args.figure:
            from .plotting import plot_partition_table

            plot_partition_table(partition_table(args.max_k, args.max_i), args.figure)
        return 0
    if fam == "k4":
        ds = parse_range(args.d)
        lines.append("d,nonisomorphic,labeled")
        vals = [closed_form_counts("k4", d=d) for d in ds]
        lines += [f"{d},{a},{b}" for d, (a, b) in zip(ds, vals)]
        figure_series = (ds, {"non-isomorphic p_4(d+3)": [v[0] for v in vals],
                              "all C(d+2,3)": [v[1] for v in vals]})
    elif fam == "kn":
        ns, is_ = parse_range(args.n), parse_range(args.i)
        lines.append("n,i,nonisomorphic,labeled")
        for n in ns:
            for i in is_:
                a, b = closed_form_counts("kn", n=n, i=i)
                lines.append(f"{n},{i},{a},{b}")
    elif fam == "petersen-conjecture":
        ds = parse_range(args.d)
        header = "d,nonisomorphic,labeled,status"
        if args.measure:
            header += ",measured_nonisomorphic,measured_labeled"
        lines.append(header)
        vals = [closed_form_counts("petersen_conjecture", d=d) for d in ds]
        measured = []
        for d, (a, b) in zip(ds, vals):
            row = f"{d},{a},{b},[conjecture]"
            if args.measure:
                res = run_enumeration(build_base("petersen"), d)
                measured.append((len(res.orbits), len(res.records)))
                row += f",{measured[-1][0]},{measured[-1][1]}"
            lines.append(row)
        series = {"conjectured non-isomorphic": [v[0] for v in vals],
                  "conjectured all": [v[1] for v in vals]}
        if measured:
            series["measured non-isomorphic"] = [m[0] for m in measured]
            series["measured all"] = [m[1] for m in measured]
        figure_series = (ds, series)
    elif fam == "collections":
        groups = collections_table(args.m, args.diameter, args.min_len)
        values = len(range(args.min_len, 2 * args.diameter + 2, 2))
        lines.append("group,collection,C_m,group_total")
        for c in groups:
            lines.append(f"{c.group_label},{' '.join(map(str, c.values))},{c.permutations},"
                         f"{group_permutation_total(args.m, c.group, values)}")
        total = sum(c.permutations for c in groups)
        lines.append(f"total,,{total},{values ** args.m}")
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown family {fam}")
    _write(args.out, "\n".join(lines) + "\n")
    if args.figure and figure_series is not None:
        from .plotting import plot_counts

        plot_counts(figure_series[0], figure_series[1], args.figure, title=fam)
    return 0


def cmd_export(args) -> int:
    g = _read_graph(args.graph)
    if args.format == "dot":
        _write(args.out, to_dot(g))
    else:
        _write(args.out, g.to_json() + "\n")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="geodetic",
        description="Geodetic graphs homeomorphic to Moore graphs and complete graphs.",
    )
    p.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="log progress")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", parents=[common], help="write a base graph as Graph JSON")
    b.add_argument("--base", default="petersen")
    b.add_argument("--plesnik", help="comma-separated Plesnik numbers; builds K_n^i")
    b.add_argument("--out", default="-")
    b.set_defaults(func=cmd_build)

    s = sub.add_parser("system", parents=[common], help="write the geodetic system as JSON")
    s.add_argument("--base", default="petersen")
    s.add_argument("--kn", type=int, help="build the stacked K_n system instead")
    s.add_argument("--root", type=int, default=0)
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_system)

    e = sub.add_parser("enum", parents=[common], help="enumerate geodetic homeomorphs")
    e.add_argument("--base", required=True)
    e.add_argument("--diameter", "-D", type=int, required=True)
    e.add_argument("--root", type=int, default=0)
    e.add_argument("--jobs", type=int, default=0, help="worker processes (0 = all cores)")
    e.add_argument("--out", default="enum_out", help="output directory")
    e.add_argument("--dot-dir", help="also write DOT + Graph JSON per solution here")
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    e.add_argument("--max-tuples-override", action="store_true")
    e.add_argument("--no-figure", action="store_true")
    e.set_defaults(func=cmd_enum)

    v = sub.add_parser("verify", parents=[common], help="check geodeticity of a Graph JSON file")
    v.add_argument("graph")
    v.add_argument("--method", choices=("unique", "even-circuit", "neighborhood", "all"),
                   default="all")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("orbits", parents=[common], help="isomorphism classes of an enumeration")
    o.add_argument("--base", required=True)
    o.add_argument("--diameter", "-D", type=int, required=True)
    o.add_argument("--root", type=int, default=0)
    o.add_argument("--jobs", type=int, default=1)
    o.add_argument("--out", default="-")
    o.set_defaults(func=cmd_orbits)

    c = sub.add_parser("count", parents=[common], help="closed-form counts")
    c.add_argument("family", choices=("partitions", "k4", "kn", "petersen-conjecture", "collections"))
    c.add_argument("--max-k", type=int, default=10)
    c.add_argument("--max-i", type=int, default=15)
    c.add_argument("--d", default="1..8", help="diameter or range, e.g. 2..7")
    c.add_argument("--n", default="5")
    c.add_argument("--i", default="3")
    c.add_argument("--m", type=int, default=6)
    c.add_argument("--diameter", "-D", type=int, default=7)
    c.add_argument("--min-len", type=int, default=5)
    c.add_argument("--measure", action="store_true",
                   help="petersen-conjecture: also run the enumeration")
    c.add_argument("--figure", help="write a PNG figure here")
    c.add_argument("--out", default="-")
    c.set_defaults(func=cmd_count)

    x = sub.add_parser("export", parents=[common], help="convert Graph JSON")
    x.add_argument("graph")
    x.add_argument("--format", choices=("dot", "json"), default="dot")
    x.add_argument("--out", default="-")
    x.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, --version and usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"geodetic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"geodetic: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (GraphError, ValueError, OSError) as exc:
        print(f"geodetic: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
