"""Command-line front end: compute indices, audit and verify the bound
catalog over graph populations, tabulate family closed forms, and run the
proof-grid audits.

Configuration precedence: command-line flags, then DEGBOUND_* environment
variables, then defaults.  Exit codes: 0 ok, 1 verdict mismatch, 2 usage,
3 I/O.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from importlib import resources
from pathlib import Path

from .bounds import DEFAULT_TOL, audit_all, builtin_catalog
from .enumeration import (
    DEFAULT_ORDER_CAP,
    EnumerationSpec,
    MAX_ORDER,
    enumerate_connected,
    read_population,
)
from .formulas import FAMILY_FORMULAS
from .graphs import (
    CHROMATIC_CAP,
    Graph,
    GraphError,
    SizeLimitError,
    chromatic_number,
    is_regular,
    make_family,
    max_degree,
    min_degree,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .indices import ALL_INDICES, all_indices
from .ratios import proofs_report

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3

ENV_PREFIX = "DEGBOUND_"
FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    pass


def _env(name: str) -> str | None:
    return os.environ.get(ENV_PREFIX + name)


def _resolve(flag_value, env_name, default, convert=str):
    if flag_value is not None:
        return flag_value
    raw = _env(env_name)
    if raw is not None:
        try:
            return convert(raw)
        except ValueError:
            raise UsageError(f"bad {ENV_PREFIX}{env_name} value: {raw!r}") from None
    return default


# ---------------------------------------------------------------------------
# Output rendering


def _fmt_cell(value):
    if value is None:
        return "undefined"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def _render_rows(rows, columns, fmt, stream):
    if fmt == "json":
        json.dump({"rows": rows}, stream, indent=2)
        stream.write("\n")
    elif fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow(["" if row.get(c) is None else row.get(c) for c in columns])
    else:
        widths = [
            max(len(c), max((len(_fmt_cell(r.get(c))) for r in rows), default=0))
            for c in columns
        ]
        header = "  ".join(c.ljust(w) for c, w in zip(columns, widths))
        stream.write(header.rstrip() + "\n")
        stream.write("  ".join("-" * w for w in widths).rstrip() + "\n")
        for row in rows:
            cells = [_fmt_cell(row.get(c)).ljust(w) for c, w in zip(columns, widths)]
            stream.write("  ".join(cells).rstrip() + "\n")


# ---------------------------------------------------------------------------
# compute


def _sniff_file_graphs(path: Path) -> list[Graph]:
    try:
        text = path.read_text()
    except OSError as exc:
        raise IOError(f"cannot read {path}: {exc}") from None
    body = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    body = [ln for ln in body if ln]
    if not body:
        raise GraphError(f"{path}: no graphs found")
    first = body[0].split()
    if len(first) == 1 and first[0].isdigit() and (len(body) == 1 or " " in body[1] or "\t" in body[1]):
        return [parse_edge_list(text)]
    return [parse_graph6(ln) for ln in body]


def _compute_rows(graphs):
    rows = []
    for g in graphs:
        vals = all_indices(g)
        try:
            chi = chromatic_number(g) if g.n <= CHROMATIC_CAP else None
        except SizeLimitError:
            chi = None
        row = {
            "graph6": to_graph6(g) if g.n <= 62 else None,
            "n": g.n,
            "m": g.m,
            "delta": min_degree(g),
            "Delta": max_degree(g),
            "regular": is_regular(g),
            "chi": chi,
        }
        for idx in ALL_INDICES:
            row[str(idx)] = vals[idx]
        rows.append(row)
    return rows


COMPUTE_COLUMNS = ["graph6", "n", "m", "delta", "Delta", "regular", "chi",
                   "R", "H", "ABC", "X", "GA", "AZI", "M2*"]


def cmd_compute(args) -> int:
    sources = [s for s in (args.g6, args.file, args.family) if s is not None]
    if len(sources) != 1:
        raise UsageError("compute needs exactly one of --g6, --file, --family")
    if args.g6 is not None:
        graphs = [parse_graph6(args.g6)]
    elif args.file is not None:
        graphs = _sniff_file_graphs(Path(args.file))
    else:
        tag, _, param = args.family.partition(":")
        graphs = [make_family(tag, int(param) if param else None)]
    fmt = _resolve(args.format, "FORMAT", "table")
    _render_rows(_compute_rows(graphs), COMPUTE_COLUMNS, fmt, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# families


def families_rows(max_n: int) -> list[dict]:
    """Closed-form index values for paths, cycles, complete graphs and stars,
    cross-checked against graph evaluation (max relative deviation 1e-12)."""
    if not 2 <= max_n <= 200:
        raise UsageError(f"--max-n must be in 2..200, got {max_n}")
    from .graphs import complete_graph, cycle_graph, path_graph, star_graph

    plans = [
        ("path", path_graph, range(2, max_n + 1)),
        ("cycle", cycle_graph, range(3, max_n + 1)),
        ("complete", complete_graph, range(2, max_n + 1)),
        ("star", star_graph, range(1, max_n)),
    ]
    rows = []
    for family, builder, params in plans:
        formula = FAMILY_FORMULAS[family]
        for p in params:
            g = builder(p)
            closed = {idx: formula(idx, p) for idx in ALL_INDICES}
            evaluated = all_indices(g)
            dev = 0.0
            for idx in ALL_INDICES:
                c, e = closed[idx], evaluated[idx]
                if c is None or e is None:
                    if c is not e:
                        dev = float("inf")
                    continue
                dev = max(dev, abs(c - e) / max(1.0, abs(c)))
            row = {"family": family, "param": p, "n": g.n, "m": g.m}
            for idx in ALL_INDICES:
                row[str(idx)] = closed[idx]
            row["max_rel_dev"] = dev
            row["agrees"] = dev <= 1e-12
            rows.append(row)
    return rows


FAMILY_COLUMNS = ["family", "param", "n", "m", "R", "H", "ABC", "X", "GA",
                  "AZI", "M2*", "max_rel_dev", "agrees"]


def cmd_families(args) -> int:
    rows = families_rows(args.max_n)
    fmt = _resolve(args.format, "FORMAT", "table")
    _render_rows(rows, FAMILY_COLUMNS, fmt, sys.stdout)
    if not all(r["agrees"] for r in rows):
        print("closed forms disagree with graph evaluation", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------
# proofs


def cmd_proofs(args) -> int:
    claims = proofs_report(args.n)
    fmt = _resolve(args.format, "FORMAT", "table")
    if fmt == "json":
        json.dump({"n": args.n, "claims": claims}, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        rows = [
            {"verdict": c["verdict"], "claim": c["claim"], "observed": c["observed"]}
            for c in claims
        ]
        _render_rows(rows, ["verdict", "claim", "observed"], fmt, sys.stdout)
    return EXIT_OK


# ---------------------------------------------------------------------------
# audit / verify


def _select_bounds(spec: str | None):
    catalog = builtin_catalog()
    if spec is None or spec.strip().lower() == "all":
        return catalog
    def norm(s):
        return s.replace("(", "").replace(")", "").upper()
    lookup = {norm(b.bound_id): b for b in catalog}
    chosen = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        b = lookup.get(norm(token))
        if b is None:
            raise UsageError(f"unknown bound id {token!r}")
        chosen.append(b)
    if not chosen:
        raise UsageError("--bounds selected nothing")
    return chosen


def _population(args):
    if (args.enumerate is None) == (args.file is None):
        raise UsageError("need exactly one of --enumerate N or --file PATH")
    if args.enumerate is not None:
        spec = EnumerationSpec(
            n=args.enumerate,
            delta_min=args.min_degree,
            molecular=args.molecular,
        )
        try:
            graphs = enumerate_connected(spec, allow_big=args.allow_n8)
        except SizeLimitError as exc:
            raise UsageError(str(exc)) from None
        return graphs, spec.describe()
    path = Path(args.file)
    try:
        graphs = read_population(path)
    except OSError as exc:
        raise IOError(f"cannot read {path}: {exc}") from None
    if args.min_degree is not None:
        graphs = [g for g in graphs if min_degree(g) >= args.min_degree]
    if args.molecular:
        graphs = [g for g in graphs if max_degree(g) <= 4]
    return graphs, f"file({path.name})"


REPORT_COLUMNS = ["bound_id", "verdict", "checked", "skipped", "holds",
                  "equality", "violated", "min_margin", "equality_witnesses",
                  "violation_witnesses"]


def _report_rows(reports, order):
    rows = []
    for bid in order:
        r = reports[bid]
        rows.append({
            "bound_id": bid,
            "verdict": r.verdict,
            "checked": r.counts["checked"],
            "skipped": r.counts["skipped"],
            "holds": r.counts["holds"],
            "equality": r.counts["equality"],
            "violated": r.counts["violated"],
            "min_margin": r.min_margin["value"] if r.min_margin else None,
            "equality_witnesses": ";".join(r.equality_witnesses),
            "violation_witnesses": ";".join(r.violation_witnesses),
        })
    return rows


def _emit_reports(reports, order, population, tol, fmt, out_dir):
    if fmt == "json":
        doc = {
            "population": population,
            "tolerance": tol,
            "reports": [reports[bid].to_dict() for bid in order],
        }
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        _render_rows(_report_rows(reports, order), REPORT_COLUMNS, fmt, sys.stdout)
    if out_dir is not None:
        out = Path(out_dir)
        try:
            out.mkdir(parents=True, exist_ok=True)
            for bid in order:
                path = out / f"{bid}.json"
                path.write_text(json.dumps(reports[bid].to_dict(), indent=2) + "\n")
            summary = out / "summary.json"
            summary.write_text(json.dumps(
                {
                    "population": population,
                    "tolerance": tol,
                    "verdicts": {bid: reports[bid].verdict for bid in order},
                },
                indent=2, sort_keys=True) + "\n")
        except OSError as exc:
            raise IOError(f"cannot write reports to {out}: {exc}") from None


def _run_audit(args):
    graphs, population = _population(args)
    bounds = _select_bounds(args.bounds)
    tol = _resolve(args.tol, "TOL", DEFAULT_TOL, float)
    jobs = _resolve(args.jobs, "JOBS", 1, int)
    reports = audit_all(bounds, graphs, tol=tol, population=population, jobs=jobs)
    order = [b.bound_id for b in bounds]
    return reports, order, population, tol


def cmd_audit(args) -> int:
    reports, order, population, tol = _run_audit(args)
    fmt = _resolve(args.format, "FORMAT", "table")
    out_dir = _resolve(args.out, "OUT", None)
    _emit_reports(reports, order, population, tol, fmt, out_dir)
    return EXIT_OK


def _expected_verdicts(args) -> dict[str, str]:
    if args.expected is not None:
        path = Path(args.expected)
        try:
            doc = json.loads(path.read_text())
        except OSError as exc:
            raise IOError(f"cannot read {path}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise IOError(f"bad expectation file {path}: {exc}") from None
        return dict(doc["verdicts"])
    if args.enumerate is None or args.min_degree is not None or args.molecular:
        raise UsageError(
            "verify needs --expected PATH for file or filtered populations"
        )
    name = f"expected_enumerate_n{args.enumerate}.json"
    ref = resources.files("degbound").joinpath("data", name)
    if not ref.is_file():
        raise UsageError(f"no pinned expectations for --enumerate {args.enumerate}; "
                         "pass --expected PATH")
    return dict(json.loads(ref.read_text())["verdicts"])


def cmd_verify(args) -> int:
    expected = _expected_verdicts(args)
    reports, order, population, tol = _run_audit(args)
    fmt = _resolve(args.format, "FORMAT", "table")
    out_dir = _resolve(args.out, "OUT", None)
    _emit_reports(reports, order, population, tol, fmt, out_dir)
    mismatches = []
    for bid in order:
        want = expected.get(bid)
        got = reports[bid].verdict
        if want is None:
            mismatches.append((bid, "<no pinned expectation>", got))
        elif want != got:
            mismatches.append((bid, want, got))
    if mismatches:
        for bid, want, got in mismatches:
            print(f"MISMATCH {bid}: expected {want}, got {got}", file=sys.stderr)
        return EXIT_MISMATCH
    print(f"verify: {len(order)} bounds match pinned verdicts on {population}",
          file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degbound",
        description="degree-based topological indices and their sharp bounds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="index table for one or more graphs")
    p.add_argument("--g6", help="a single graph6 string")
    p.add_argument("--file", help="graph6 lines, or an edge-list file (n, then 'u v' lines)")
    p.add_argument("--family", help="named family, e.g. cycle:7, star:8, double_star")
    p.add_argument("--format", choices=FORMATS)
    p.set_defaults(func=cmd_compute)

    def population_flags(p):
        p.add_argument("--enumerate", type=int, metavar="N",
                       help=f"all connected graphs of order N (2..{DEFAULT_ORDER_CAP}; "
                            f"{MAX_ORDER} with --allow-n8)")
        p.add_argument("--file", help="population file, one graph6 per line")
        p.add_argument("--min-degree", type=int, metavar="K")
        p.add_argument("--molecular", action="store_true",
                       help="restrict to maximum degree <= 4")
        p.add_argument("--allow-n8", action="store_true",
                       help="permit the 2**28-subset enumeration at N=8")
        p.add_argument("--bounds", metavar="LIST|all", default="all")
        p.add_argument("--tol", type=float)
        p.add_argument("--format", choices=FORMATS)
        p.add_argument("--out", metavar="DIR", help="write one report JSON per bound")
        p.add_argument("--jobs", type=int, metavar="N")

    p = sub.add_parser("audit", help="sharpness reports over a population")
    population_flags(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("verify", help="audit and compare against pinned verdicts")
    population_flags(p)
    p.add_argument("--expected", metavar="PATH",
                   help="expectation file (defaults to the packaged verdicts "
                        "for plain --enumerate populations)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("families", help="closed-form index table for named families")
    p.add_argument("--max-n", type=int, default=20, metavar="N")
    p.add_argument("--format", choices=FORMATS)
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("proofs", help="proof-grid ratio audits")
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--format", choices=FORMATS)
    p.set_defaults(func=cmd_proofs)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO if isinstance(exc, GraphError) else EXIT_USAGE
    except IOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
