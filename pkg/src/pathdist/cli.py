"""Command-line interface.

Exit status: 0 on success, 2 for usage/parse/validation errors, 3 when the
requested pair or graph is disconnected.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .complete import CompleteGraphSpec, complete_distribution
from .graph import (
    DisconnectedPairError,
    GraphError,
    NodePair,
    builtin_graph,
    format_edge_list,
    parse_edge_list,
    shortest_path_length,
)
from .paths import all_pairs_stats, count_paths_by_length
from .stats import as_fraction, convergence_scan, render_rational
from .walks import truncated_expected_walk_length, walk_counts

EXIT_USAGE = 2
EXIT_DISCONNECTED = 3


def load_graph(source: str):
    if source.startswith("builtin:"):
        return builtin_graph(source[len("builtin:"):])
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphError(f"cannot read graph file {source!r}: {exc.strerror}") from None
    return parse_edge_list(text)


def _csv_text(header, rows, trailer=()):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    for key, value in trailer:
        buf.write(f"# {key}={value}\n")
    return buf.getvalue()


def _json_text(obj):
    return json.dumps(obj, indent=2) + "\n"


def cmd_pairdist(args, g) -> str:
    pair = NodePair(args.source, args.target)
    spl = shortest_path_length(g, pair) if pair.source != pair.target else 0
    limit = args.limit if args.limit is not None else spl + args.k
    dist = count_paths_by_length(g, pair, limit, threads=args.threads)
    walks = walk_counts(g, pair, limit) if args.include_walks else None

    if args.format == "json":
        rows = []
        for n in range(1, limit + 1):
            row = {"length": n, "paths": str(dist.at(n))}
            if walks is not None:
                row["walks"] = str(walks.at(n))
            rows.append(row)
        out = {
            "source": pair.source,
            "target": pair.target,
            "spl": dist.shortest,
            "limit": limit,
            "rows": rows,
            "total_paths": str(dist.total),
            "longest_found": dist.longest_found,
            "exhausted": dist.exhausted,
        }
        if walks is not None:
            out["total_walks"] = str(walks.total)
        return _json_text(out)

    header = ["length", "path_count"] + (["walk_count"] if walks is not None else [])
    rows = [
        [n, dist.at(n)] + ([walks.at(n)] if walks is not None else [])
        for n in range(1, limit + 1)
    ]
    trailer = [("spl", dist.shortest), ("total_paths", dist.total)]
    if walks is not None:
        trailer.append(("total_walks", walks.total))
    trailer += [("longest_found", dist.longest_found), ("exhausted", str(dist.exhausted).lower())]
    return _csv_text(header, rows, trailer)


def cmd_converge(args, g) -> str:
    pair = NodePair(args.source, args.target)
    report = convergence_scan(
        g, pair, epsilon=as_fraction(args.epsilon), k_max=args.k_max,
        early_stop=args.early_stop, threads=args.threads,
    )
    last_k = report.entries[-1].k
    walks = walk_counts(g, pair, report.shortest + last_k)

    def fmt(x):
        return render_rational(x, exact=args.exact)

    rows = []
    for e in report.entries:
        ew = truncated_expected_walk_length(walks, e.k)
        rows.append([e.k, fmt(e.expected_length), fmt(e.delta), fmt(ew), fmt(ew - report.shortest)])

    header = ["k", "expected_paths", "delta_paths", "expected_walks", "delta_walks"]
    if args.format == "json":
        return _json_text({
            "source": pair.source,
            "target": pair.target,
            "spl": report.shortest,
            "epsilon": str(report.epsilon),
            "converged_at_k": report.converged_at_k,
            "rows": [dict(zip(header, r)) for r in rows],
        })
    converged = "" if report.converged_at_k is None else report.converged_at_k
    return _csv_text(header, rows, [("spl", report.shortest), ("converged_at_k", converged)])


def cmd_allpairs(args, g) -> str:
    stats = all_pairs_stats(g, args.limit, threads=args.threads)
    header = ["i", "j", "total_paths", "min_len", "max_len", "mean_len", "mode_len"]
    rows = [
        [s.pair.source, s.pair.target, s.total_paths, s.min_length, s.max_length,
         render_rational(s.mean_length, exact=args.exact), s.mode_length]
        for s in stats
    ]
    if args.format == "json":
        out = []
        for r in rows:
            d = dict(zip(header, r))
            d["total_paths"] = str(d["total_paths"])
            out.append(d)
        return _json_text(out)
    return _csv_text(header, rows)


def cmd_oracle(args, g=None) -> str:
    dist = complete_distribution(CompleteGraphSpec(args.n))
    if args.format == "json":
        return _json_text({
            "n": args.n,
            "rows": [{"length": n, "paths": str(c)} for n, c in enumerate(dist.counts, start=1)],
            "total_paths": str(dist.total),
        })
    return _csv_text(["length", "path_count"], list(enumerate(dist.counts, start=1)))


def cmd_export_builtin(args, g=None) -> str:
    return format_edge_list(builtin_graph(args.name))


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathdist",
        description="Walk and simple-path length distributions between node pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--threads", type=_positive_int, default=None,
                        help="worker cap for the path search (default: all CPUs)")
    common.add_argument("--exact", action="store_true", help="print rationals as num/den")

    with_graph = argparse.ArgumentParser(add_help=False)
    with_graph.add_argument("--graph", required=True, help="edge-list path or builtin:NAME")

    with_pair = argparse.ArgumentParser(add_help=False)
    with_pair.add_argument("-s", "--source", type=int, required=True)
    with_pair.add_argument("-t", "--target", type=int, required=True)

    p = sub.add_parser("pairdist", parents=[common, with_graph, with_pair],
                       help="per-length path (and walk) counts for one pair")
    depth = p.add_mutually_exclusive_group(required=True)
    depth.add_argument("--limit", type=_positive_int, help="maximum path length")
    depth.add_argument("--k", type=int, help="search to shortest length + K")
    p.add_argument("--include-walks", action="store_true")
    p.set_defaults(func=cmd_pairdist, needs_graph=True)

    p = sub.add_parser("converge", parents=[common, with_graph, with_pair],
                       help="truncated expectations and deltas for k = 0..k_max")
    p.add_argument("--epsilon", default="1e-6")
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--early-stop", action="store_true", help="stop at the first converged k")
    p.set_defaults(func=cmd_converge, needs_graph=True)

    p = sub.add_parser("allpairs", parents=[common, with_graph],
                       help="summary statistics for every unordered pair")
    p.add_argument("--limit", type=_positive_int, required=True)
    p.set_defaults(func=cmd_allpairs, needs_graph=True)

    p = sub.add_parser("oracle", parents=[common], help="closed-form path counts for K_N")
    p.add_argument("n", type=int, metavar="N")
    p.set_defaults(func=cmd_oracle, needs_graph=False)

    p = sub.add_parser("export-builtin", parents=[common], help="write a builtin graph as an edge list")
    p.add_argument("name", help="karate, complete:<N>, path:<N> or cycle:<N>")
    p.set_defaults(func=cmd_export_builtin, needs_graph=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", None) is not None and args.k < 0:
        parser.error("--k must be non-negative")
    try:
        g = load_graph(args.graph) if args.needs_graph else None
        text = args.func(args, g)
    except DisconnectedPairError as exc:
        print(f"pathdist: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except (GraphError, ValueError) as exc:
        print(f"pathdist: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
