"""Command-line front end: builds, censuses, orbit reports, verification.

Exit codes: 0 all checks pass, 1 a verification mismatch (the run still
completes and the mismatch is in the report), 2 usage or config error.
Progress goes to standard error; standard output stays machine-clean.
"""

import argparse
import csv
import io
import json
import sys
import time

from .cliques import second_largest_census
from .constructions import labels_for_q, verify_construction
from .errors import PaleyCliqueError
from .field import DEFAULT_TABLE_BOUND, published_field, squares_and_s0
from .graph import build_graph, srg_parameters, subfield_clique
from .group import group_order, orbit_partition, stabilizer

SUPPORTED_Q = (9, 11, 13, 17, 19, 23)


def _progress(msg):
    print(msg, file=sys.stderr, flush=True)


def _parse_q(value):
    if value == "all":
        return list(SUPPORTED_Q)
    try:
        qs = [int(tok) for tok in value.split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError("bad q list %r" % (value,))
    bad = [q for q in qs if q not in SUPPORTED_Q]
    if bad or not qs:
        raise argparse.ArgumentTypeError(
            "q must be a comma list from %s or 'all'" % (SUPPORTED_Q,))
    return qs


def _field_block(ctx):
    meta = ctx.meta()
    meta["squares_count"] = len(squares_and_s0(ctx).S)
    return meta


def _cmd_build(args):
    reports = []
    for q in args.q:
        t0 = time.time()
        ctx = published_field(q, table_bound=args.table_bound)
        graph = build_graph(ctx)
        params = srg_parameters(graph)
        reports.append({
            "q": q,
            "field": _field_block(ctx),
            "srg_parameters": list(params),
            "group_order": group_order(ctx),
            "second_size": graph.second_size,
            "seconds": round(time.time() - t0, 3),
        })
        _progress("built q=%d in %.2fs" % (q, time.time() - t0))
        if args.dump_graph:
            _dump_graph(graph, args.dump_graph, args.format)
    return reports, 0


def _dump_graph(graph, path, fmt):
    with open(path, "w", newline="") as fh:
        if fmt == "csv":
            w = csv.writer(fh)
            w.writerow(["u", "v"])
            for u in range(graph.n):
                row = graph.rows[u] >> (u + 1) << (u + 1)
                while row:
                    v = row & -row
                    w.writerow([u, v.bit_length() - 1])
                    row ^= v
        else:
            for u in range(graph.n):
                bits = "".join("1" if graph.adjacent(u, v) else "0"
                               for v in range(u))
                fh.write(bits + "\n")


def _run_census(q, args):
    ctx = published_field(q, table_bound=args.table_bound)
    graph = build_graph(ctx)
    _progress("census q=%d (n=%d, target size %d) ..."
              % (q, graph.n, graph.second_size))
    t0 = time.time()
    cen = second_largest_census(graph, workers=args.workers)
    _progress("census q=%d: %d cliques in %.1fs"
              % (q, cen["count"], time.time() - t0))
    return ctx, graph, cen


def _cmd_census(args):
    reports = []
    for q in args.q:
        ctx, graph, cen = _run_census(q, args)
        recs = orbit_partition(ctx, cen["cliques"])
        report = {
            "q": q,
            "field": _field_block(ctx),
            "clique_size": cen["clique_size"],
            "census_count": cen["count"],
            "orbit_count": len(recs),
            "max_clique_size": cen["max_clique_size"],
            "max_clique_count": cen["max_clique_count"],
        }
        if args.dump_cliques:
            with open(args.dump_cliques, "w") as fh:
                for c in cen["cliques"]:
                    fh.write(" ".join(map(str, c.vertices)) + "\n")
        reports.append(report)
    return reports, 0


def _cmd_orbits(args):
    reports = []
    for q in args.q:
        ctx, graph, cen = _run_census(q, args)
        recs = orbit_partition(ctx, cen["cliques"])
        report = {
            "q": q,
            "clique_size": cen["clique_size"],
            "census_count": cen["count"],
            "orbit_count": len(recs),
            "orbits": [
                {
                    "representative": list(r.representative.vertices),
                    "orbit_size": r.orbit_size,
                    "stabilizer_order": r.stabilizer_order,
                    "stabilizer_type": r.stabilizer_type,
                    "members_digest": r.members_digest,
                }
                for r in recs
            ],
        }
        reports.append(report)
    return reports, 0


EXPECTED_ORBIT_COUNTS = {9: 3, 11: 3, 13: 4, 17: 9, 19: 4, 23: 4}


def _cmd_verify_paper(args):
    reports = []
    ok = True
    for q in args.q:
        ctx, graph, cen = _run_census(q, args)
        recs = orbit_partition(ctx, cen["cliques"])
        labels = labels_for_q(q)
        if args.construction:
            labels = [lb for lb in labels if lb == args.construction]
        per_label = []
        for lb in labels:
            _progress("verifying %s ..." % lb)
            rep = verify_construction(ctx, graph, lb,
                                      check_family=not args.skip_family)
            ok = ok and rep["all_match_expected"]
            rep.pop("collinear_structure")
            per_label.append(rep)
        max_expected = q * (q + 1) // 2
        sub = subfield_clique(graph)
        sub_orbit = group_order(ctx) // len(stabilizer(ctx, sub))
        census_block = {
            "q": q,
            "clique_size": cen["clique_size"],
            "census_count": cen["count"],
            "orbit_count": len(recs),
            "orbit_count_expected": EXPECTED_ORBIT_COUNTS[q],
            "orbit_sizes_sorted": sorted(r.orbit_size for r in recs),
            "max_clique_count": cen["max_clique_count"],
            "max_clique_count_expected": max_expected,
            "subfield_orbit_size": sub_orbit,
            "group_order": group_order(ctx),
        }
        census_ok = (
            len(recs) == EXPECTED_ORBIT_COUNTS[q]
            and cen["max_clique_count"] == max_expected
            and sub_orbit == max_expected
            and sum(r.orbit_size for r in recs) == cen["count"]
        )
        census_block["all_match_expected"] = census_ok
        ok = ok and census_ok
        reports.append({"constructions": per_label, "census": census_block})
    return reports, (0 if ok else 1)


def _cmd_table1(args):
    rows = []
    ok = True
    for q in args.q:
        ctx, graph, cen = _run_census(q, args)
        recs = orbit_partition(ctx, cen["cliques"])
        row = {
            "q": q,
            "clique_size": cen["clique_size"],
            "orbit_count": len(recs),
            "orbit_count_expected": EXPECTED_ORBIT_COUNTS[q],
        }
        ok = ok and row["orbit_count"] == row["orbit_count_expected"]
        rows.append(row)
    return rows, (0 if ok else 1)


def _cmd_dump_graph(args):
    if not args.out:
        raise PaleyCliqueError("dump-graph needs --out")
    reports = []
    for q in args.q:
        ctx = published_field(q, table_bound=args.table_bound)
        graph = build_graph(ctx)
        path = args.out if len(args.q) == 1 else "%s.q%d" % (args.out, q)
        _dump_graph(graph, path, args.format)
        reports.append({"q": q, "path": path, "n": graph.n})
        _progress("dumped q=%d graph to %s" % (q, path))
    return reports, 0


def _emit(reports, args, exit_code):
    if args.command == "dump-graph":
        return  # file output already written
    if args.format == "json":
        text = json.dumps(reports, indent=2, default=str) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        rows = _flatten_rows(reports)
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
            w.writeheader()
            w.writerows(rows)
        text = buf.getvalue()
    else:
        lines = []
        for row in _flatten_rows(reports):
            lines.append("  ".join("%s=%s" % kv for kv in row.items()))
        lines.append("RESULT: %s" % ("PASS" if exit_code == 0 else "FAIL"))
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _flatten_rows(reports):
    rows = []
    for rep in reports:
        if "constructions" in rep:
            for lb in rep["constructions"]:
                rows.append({k: v for k, v in lb.items()
                             if not isinstance(v, (list, dict))})
            cen = rep["census"]
            rows.append({k: v for k, v in cen.items()
                         if not isinstance(v, (list, dict))})
        else:
            rows.append({k: v for k, v in rep.items()
                         if not isinstance(v, (list, dict))})
    return rows


_COMMANDS = {
    "build": _cmd_build,
    "census": _cmd_census,
    "orbits": _cmd_orbits,
    "verify-paper": _cmd_verify_paper,
    "table1": _cmd_table1,
    "dump-graph": _cmd_dump_graph,
}


def make_parser():
    parser = argparse.ArgumentParser(
        prog="paleyclique",
        description="Second-largest maximal clique verifier for P(q^2).")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--q", type=_parse_q, default=list(SUPPORTED_Q),
                        help="comma list of q values, or 'all' (default)")
    parser.add_argument("--format", choices=("json", "csv", "text"),
                        default="json")
    parser.add_argument("--out", default=None,
                        help="write the report here instead of stdout")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--construction", default=None,
                        help="restrict verify-paper to one label")
    parser.add_argument("--table-bound", type=int,
                        default=DEFAULT_TABLE_BOUND)
    parser.add_argument("--dump-cliques", default=None,
                        help="write census cliques (one per line) here")
    parser.add_argument("--dump-graph", default=None,
                        help="also dump adjacency during 'build'")
    parser.add_argument("--skip-family", action="store_true",
                        help="skip the orbit-family closure cross-check")
    return parser


def run(args) -> int:
    if args.workers < 1:
        raise PaleyCliqueError("workers must be positive")
    reports, code = _COMMANDS[args.command](args)
    _emit(reports, args, code)
    return code


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return run(args)
    except PaleyCliqueError as exc:
        _progress("error: %s" % (exc,))
        return 2


if __name__ == "__main__":
    sys.exit(main())
