"""Command-line driver: impactgraph <command> <file> [flags].

Commands: scenarios, matrices, rank, compare, impulse, paths.  Output is
an aligned table by default; ``--format json`` and ``--format csv`` emit
machine-readable equivalents that are byte-identical across runs for the
same input and flags.  Exit codes: 0 success, 1 usage or input problems,
2 computation failures.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .baselines import impulse_run, kosko_rank, summed_rank
from .cognitive_map import CognitiveMap
from .errors import ImpactGraphError, MapFormatError
from .impact import AmplificationParams
from .influence import (
    DEFAULT_EPSILON,
    DEFAULT_MAX_STEPS,
    analyze,
    build_matrices,
    propagate,
    rate_matrix,
)
from .paths import DEFAULT_MAX_PATHS, enumerate_simple_paths
from .selection import assess_pair


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(value) -> str:
    """Table-mode cell: floats at 4 decimal places, everything else as-is."""
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def _full(value) -> str:
    """CSV cell at full precision."""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _render_table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[_fmt(v) for v in row] for row in rows]
    widths = [max(len(r[c]) for r in cells) for c in range(len(headers))]
    lines = [
        "  ".join(r[c].ljust(widths[c]) for c in range(len(headers))).rstrip()
        for r in cells
    ]
    return "\n".join(lines)


def _render_csv(headers, rows) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow([_full(v) for v in row])
    return out.getvalue().rstrip("\n")


def _matrix_rows(cmap, matrix, as_int=False):
    rows = []
    for label, row in zip(cmap.labels, matrix):
        cast = (lambda v: int(v)) if as_int else (lambda v: float(v))
        rows.append([label] + [cast(v) for v in row])
    return rows


def _matrix_json(matrix, as_int=False):
    if as_int:
        return [[int(v) for v in row] for row in matrix]
    return [[float(v) for v in row] for row in matrix]


def _params(args) -> AmplificationParams:
    return AmplificationParams(steepness=args.steepness)


def _emit(text: str) -> int:
    print(text)
    return 0


# -- commands ------------------------------------------------------------


def cmd_scenarios(cmap, args) -> int:
    source = cmap.resolve(args.source)
    target = cmap.resolve(args.target)
    assessment = assess_pair(cmap, source, target, _params(args), args.max_paths)
    records = []
    choice = assessment.choice
    for k, score in enumerate(assessment.scores):
        in_frontier = choice is not None and score in choice.frontier.members
        tiebreak = None
        if in_frontier:
            tiebreak = choice.scores[choice.frontier.members.index(score)]
        records.append(
            {
                "path": [cmap.labels[i] for i in score.path.nodes],
                "rendered": score.path.describe(cmap),
                "force": float(score.force),
                "speed": int(score.speed),
                "pareto": in_frontier,
                "score": tiebreak,
                "chosen": choice is not None and score == choice.chosen,
            }
        )
    if args.format == "json":
        doc = {
            "from": cmap.labels[source],
            "to": cmap.labels[target],
            "scenarios": [
                {k: v for k, v in r.items() if k != "rendered"} for r in records
            ],
        }
        return _emit(json.dumps(doc, indent=2))
    if args.format == "csv":
        rows = [
            [
                "->".join(r["path"]),
                r["force"],
                r["speed"],
                "yes" if r["pareto"] else "no",
                "" if r["score"] is None else r["score"],
                "yes" if r["chosen"] else "no",
            ]
            for r in records
        ]
        return _emit(_render_csv(["path", "force", "speed", "pareto", "score", "chosen"], rows))
    rows = [
        [
            k + 1,
            r["rendered"],
            r["force"],
            r["speed"],
            "yes" if r["pareto"] else "no",
            "-" if r["score"] is None else r["score"],
            "*" if r["chosen"] else "",
        ]
        for k, r in enumerate(records)
    ]
    return _emit(
        _render_table(["#", "path", "force", "speed", "pareto", "score", "chosen"], rows)
    )


def cmd_matrices(cmap, args) -> int:
    impact, time = build_matrices(cmap, _params(args), args.max_paths)
    rate = rate_matrix(impact, time)
    steady = propagate(rate, args.epsilon, args.max_steps, args.normalization)
    named = [
        ("Z", impact, False),
        ("T", time, True),
        ("Z1", rate, False),
        ("Zstar", steady, False),
    ]
    if args.format == "json":
        doc = {name: _matrix_json(m, as_int) for name, m, as_int in named}
        return _emit(json.dumps(doc, indent=2))
    if args.format == "csv":
        blocks = []
        for name, m, as_int in named:
            rows = _matrix_rows(cmap, m, as_int)
            blocks.append(f"# {name}\n" + _render_csv(["node", *cmap.labels], rows))
        return _emit("\n".join(blocks))
    blocks = []
    for name, m, as_int in named:
        rows = _matrix_rows(cmap, m, as_int)
        blocks.append(f"{name}\n" + _render_table(["", *cmap.labels], rows))
    return _emit("\n\n".join(blocks))


def _ranking_for(cmap, args):
    if args.model == "kosko":
        return kosko_rank(cmap, args.max_paths)
    if args.model == "sum":
        return summed_rank(cmap, _params(args), args.max_paths)
    result = analyze(
        cmap,
        _params(args),
        args.max_paths,
        args.normalization,
        method="iterative",
        epsilon=args.epsilon,
        max_steps=args.max_steps,
    )
    return result.ranking


def _rank_records(cmap, ranking):
    return [
        {"rank": place + 1, "node": cmap.labels[entry.node], "value": entry.influence}
        for place, entry in enumerate(ranking)
    ]


def cmd_rank(cmap, args) -> int:
    records = _rank_records(cmap, _ranking_for(cmap, args))
    if args.format == "json":
        return _emit(json.dumps(records, indent=2))
    rows = [[r["rank"], r["node"], r["value"]] for r in records]
    if args.format == "csv":
        return _emit(_render_csv(["rank", "node", "value"], rows))
    return _emit(_render_table(["rank", "node", "value"], rows))


def cmd_compare(cmap, args) -> int:
    result = analyze(
        cmap,
        _params(args),
        args.max_paths,
        args.normalization,
        method="iterative",
        epsilon=args.epsilon,
        max_steps=args.max_steps,
    )
    report = {
        "pareto": result.ranking,
        "kosko": kosko_rank(cmap, args.max_paths),
        "sum": summed_rank(cmap, _params(args), args.max_paths),
    }
    if args.format == "json":
        doc = {name: _rank_records(cmap, ranking) for name, ranking in report.items()}
        return _emit(json.dumps(doc, indent=2))
    # per-node rows: each model's value and rank position side by side
    positions = {
        name: {entry.node: place + 1 for place, entry in enumerate(ranking)}
        for name, ranking in report.items()
    }
    values = {
        name: {entry.node: entry.influence for entry in ranking}
        for name, ranking in report.items()
    }
    headers = ["node"]
    for name in report:
        headers += [f"{name}_value", f"{name}_rank"]
    rows = []
    for i, label in enumerate(cmap.labels):
        row = [label]
        for name in report:
            row += [values[name][i], positions[name][i]]
        rows.append(row)
    if args.format == "csv":
        return _emit(_render_csv(headers, rows))
    return _emit(_render_table(headers, rows))


def cmd_impulse(cmap, args) -> int:
    parts = [p.strip() for p in args.init.split(",")]
    try:
        pulses = [float(p) for p in parts]
    except ValueError:
        raise ValueError(f"--init must be comma-separated numbers, got {args.init!r}")
    if len(pulses) != cmap.n:
        raise ValueError(f"--init needs {cmap.n} values, got {len(pulses)}")
    trajectory = impulse_run(cmap, pulses, args.steps)
    if args.format == "json":
        doc = {
            "steps": [
                {"t": t, "values": list(s.values), "pulses": list(s.pulses)}
                for t, s in enumerate(trajectory)
            ]
        }
        return _emit(json.dumps(doc, indent=2))
    blocks = []
    for title, field in (("values", "values"), ("pulses", "pulses")):
        rows = [[t, *getattr(s, field)] for t, s in enumerate(trajectory)]
        if args.format == "csv":
            blocks.append(f"# {title}\n" + _render_csv(["t", *cmap.labels], rows))
        else:
            blocks.append(f"{title}\n" + _render_table(["t", *cmap.labels], rows))
    joiner = "\n" if args.format == "csv" else "\n\n"
    return _emit(joiner.join(blocks))


def cmd_paths(cmap, args) -> int:
    source = cmap.resolve(args.source)
    target = cmap.resolve(args.target)
    found = enumerate_simple_paths(cmap, source, target, args.max_paths)
    if args.format == "json":
        doc = [
            {"nodes": [cmap.labels[i] for i in p.nodes], "edges": p.edge_count}
            for p in found
        ]
        return _emit(json.dumps(doc, indent=2))
    if args.format == "csv":
        rows = [
            ["->".join(cmap.labels[i] for i in p.nodes), p.edge_count] for p in found
        ]
        return _emit(_render_csv(["path", "edges"], rows))
    rows = [[k + 1, p.describe(cmap), p.edge_count] for k, p in enumerate(found)]
    return _emit(_render_table(["#", "path", "edges"], rows))


# -- wiring --------------------------------------------------------------


def _add_common(sub):
    sub.add_argument("file", help="cognitive map file (CSV or JSON)")
    sub.add_argument(
        "--format",
        choices=("table", "json", "csv"),
        default="table",
        help="output format (default: table)",
    )
    sub.add_argument(
        "--max-paths",
        type=int,
        default=DEFAULT_MAX_PATHS,
        help="per-pair simple path budget",
    )


def _add_scoring(sub):
    sub.add_argument(
        "--lambda",
        dest="steepness",
        type=float,
        default=2.0,
        help="amplification steepness (default: 2.0)",
    )


def _add_steady(sub):
    sub.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    sub.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    sub.add_argument(
        "--normalization",
        choices=("signed", "abs"),
        default="signed",
        help="steady-state denominator (default: signed)",
    )


def _add_pair(sub):
    sub.add_argument("--from", dest="source", required=True, metavar="NODE")
    sub.add_argument("--to", dest="target", required=True, metavar="NODE")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="impactgraph", description=__doc__.splitlines()[0])
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub = commands.add_parser("scenarios", help="score all scenarios for one pair")
    _add_common(sub)
    _add_scoring(sub)
    _add_pair(sub)
    sub.set_defaults(handler=cmd_scenarios)

    sub = commands.add_parser("matrices", help="impact, time, rate, steady state")
    _add_common(sub)
    _add_scoring(sub)
    _add_steady(sub)
    sub.set_defaults(handler=cmd_matrices)

    sub = commands.add_parser("rank", help="rank nodes by influence")
    _add_common(sub)
    _add_scoring(sub)
    _add_steady(sub)
    sub.add_argument(
        "--model",
        choices=("pareto", "kosko", "sum"),
        default="pareto",
        help="ranking model (default: pareto)",
    )
    sub.set_defaults(handler=cmd_rank)

    sub = commands.add_parser("compare", help="all ranking models side by side")
    _add_common(sub)
    _add_scoring(sub)
    _add_steady(sub)
    sub.set_defaults(handler=cmd_compare)

    sub = commands.add_parser("impulse", help="run the impulse process")
    _add_common(sub)
    sub.add_argument("--init", required=True, help="initial pulses, comma-separated")
    sub.add_argument("--steps", type=int, default=5)
    sub.set_defaults(handler=cmd_impulse)

    sub = commands.add_parser("paths", help="list simple paths for one pair")
    _add_common(sub)
    _add_pair(sub)
    sub.set_defaults(handler=cmd_paths)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cmap = CognitiveMap.load(args.file)
    except OSError as exc:
        print(f"impactgraph: error: cannot read {args.file}: {exc}", file=sys.stderr)
        return 1
    except MapFormatError as exc:
        print(f"impactgraph: error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.handler(cmap, args)
    except ImpactGraphError as exc:
        print(f"impactgraph: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"impactgraph: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
