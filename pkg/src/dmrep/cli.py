"""Command-line front end.

Verbs: solve, compare, verify, table, cache-gc.  Exit codes: 0 ok,
1 diff or verification failure, 2 budget exhausted, 3 usage error.
Reports are written under <cache-dir>/reports/ and printed to stdout;
status goes to stderr so stdout stays machine-readable.
"""

import argparse
import os
import sys

from .budget import UNLIMITED, Budget
from .cache import (gc, load_resume, report_path, resume_path,
                    solve_lattice_cached, write_resume)
from .classify import assemble_row, orbit_assemble, peripheral_presets
from .errors import BudgetExceeded, DmrepError
from .lattices import catalog
from .variety import enumerate_branches
from .reference import field_key_from_coeffs, reference_row
from .report import (compare_row, load_report, point_from_blob,
                     rows_to_csv, rows_to_markdown, solution_report,
                     to_canonical_json, trace_invariants, verify_report)

EXIT_OK = 0
EXIT_DIFF = 1
EXIT_BUDGET = 2
EXIT_USAGE = 3

DEFAULT_CACHE = ".dmrep-cache"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("error: %s\n" % message)
        raise SystemExit(EXIT_USAGE)


def _build_parser():
    p = _Parser(prog="dmrep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, fmt_default="json"):
        sp.add_argument("--lattice", action="append", default=None,
                        help="lattice id, e.g. t3-p7-k2 (repeatable)")
        sp.add_argument("--all", action="store_true",
                        help="select every tabulated lattice")
        sp.add_argument("--cache-dir", default=DEFAULT_CACHE)
        sp.add_argument("--format", choices=("json", "csv", "markdown"),
                        default=fmt_default)

    sp = sub.add_parser("solve", help="solve, classify and report")
    common(sp)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--precision", type=int, default=30,
                    help="decimal digits for numeric certification")
    sp.add_argument("--budget-steps", type=int, default=None)
    sp.add_argument("--budget-seconds", type=float, default=None)
    sp.add_argument("--peripheral-preset", default=None,
                    choices=sorted(peripheral_presets()))

    sp = sub.add_parser("compare", help="diff reports against the "
                                        "published tables")
    common(sp)

    sp = sub.add_parser("verify", help="re-check a report's certificates "
                                       "without the solver")
    sp.add_argument("report", help="path to a solve report")

    sp = sub.add_parser("table", help="render solved rows as a table")
    common(sp, fmt_default="markdown")

    sp = sub.add_parser("cache-gc", help="collect stale cache entries")
    sp.add_argument("--cache-dir", default=DEFAULT_CACHE)
    sp.add_argument("--all", action="store_true",
                    help="remove every entry, not just stale ones")
    return p


def _select(args):
    specs = catalog()
    if args.all:
        return specs
    if not args.lattice:
        raise SystemExit(_usage("no lattice selected (use --lattice or "
                                "--all)"))
    by_id = {s.id: s for s in specs}
    chosen = []
    for lid in args.lattice:
        if lid not in by_id:
            raise SystemExit(_usage("unknown lattice %r (known: %s)"
                                    % (lid, ", ".join(sorted(by_id)))))
        chosen.append(by_id[lid])
    return chosen


def _usage(msg):
    sys.stderr.write("error: %s\n" % msg)
    return EXIT_USAGE


def _status(msg):
    sys.stderr.write(msg + "\n")


def cmd_solve(args):
    specs = _select(args)
    presets = peripheral_presets()
    words = presets[args.peripheral_preset] if args.peripheral_preset else None
    for spec in specs:
        budget = Budget(args.budget_steps, args.budget_seconds) \
            if (args.budget_steps or args.budget_seconds) else UNLIMITED
        try:
            solution, stats = solve_lattice_cached(
                spec, seed=args.seed, budget=budget,
                cache_dir=args.cache_dir)
            reports = orbit_assemble(
                spec, solution.points, peripheral_words=words,
                dps_pair=(args.precision, 2 * args.precision))
            row = assemble_row(spec, reports)
        except BudgetExceeded as e:
            tok = resume_path(args.cache_dir, spec.id)
            if not os.path.exists(tok):
                # exhausted after branch solving (all branches cached)
                write_resume(args.cache_dir, spec, args.seed,
                             [b.key for b in enumerate_branches(spec)],
                             [], e)
            _status("%s: budget exhausted (%s); resume token at %s"
                    % (spec.id, e, tok))
            return EXIT_BUDGET
        doc = solution_report(spec, solution, reports, row, {
            "seed": args.seed,
            "precision": args.precision,
            "peripheral_preset": args.peripheral_preset,
        })
        text = to_canonical_json(doc)
        path = report_path(args.cache_dir, spec.id)
        os.makedirs(os.path.dirname(path), exist_ok=True)
        tmp = path + ".tmp"
        with open(tmp, "w") as f:
            f.write(text)
        os.replace(tmp, path)
        _status("%s: total %d, %d orbits (%d cached / %d solved branches) "
                "-> %s" % (spec.id, row.total, row.galois_orbits,
                           stats["hits"], stats["misses"], path))
        if args.format == "json":
            sys.stdout.write(text)
        elif args.format == "csv":
            sys.stdout.write(rows_to_csv([doc["row"]]))
        else:
            sys.stdout.write(rows_to_markdown([doc["row"]]))
    return EXIT_OK


def _load_doc(args, spec):
    path = report_path(args.cache_dir, spec.id)
    try:
        with open(path) as f:
            return load_report(f.read())
    except OSError:
        return None


def cmd_compare(args):
    specs = _select(args)
    any_diff = False
    out = []
    for spec in specs:
        doc = _load_doc(args, spec)
        if doc is None:
            return _usage("no report for %s under %s (run solve first)"
                          % (spec.id, args.cache_dir))
        evidence = {}
        for blob in doc["orbits"]:
            pt = point_from_blob(spec, blob["point"])
            key = ("cyc", blob["cyclotomic_id"]) \
                if blob["cyclotomic_id"] is not None \
                else ("poly", tuple(blob["min_poly"]))
            evidence.setdefault(key, []).append({
                "branch": blob["point"]["branch"],
                "degree": blob["degree"],
                "min_poly": blob["min_poly"],
                "conductor": blob["cyclotomic_id"],
                "trace_invariants": trace_invariants(spec, pt),
            })
        diffs, notes = compare_row(doc["row"], reference_row(spec.id),
                                   orbit_evidence=evidence)
        any_diff = any_diff or bool(diffs)
        out.append({"lattice": spec.id, "match": not diffs,
                    "diffs": diffs, "notes": notes})
    doc = {"schema": "dmrep.compare/1", "rows": out}
    if args.format == "json":
        sys.stdout.write(_compare_json(doc))
    else:
        for row in out:
            line = "%s: %s" % (row["lattice"],
                               "match" if row["match"] else
                               "%d diffs" % len(row["diffs"]))
            sys.stdout.write(line + "\n")
            for d in row["diffs"]:
                where = " %s" % (d["field"],) if d.get("field") else ""
                sys.stdout.write("  %s%s: computed %r vs reference %r\n"
                                 % (d["kind"], where,
                                    d["computed"], d["reference"]))
            for n in row["notes"]:
                sys.stdout.write("  note: %s\n" % n)
    return EXIT_DIFF if any_diff else EXIT_OK


def _compare_json(doc):
    import json
    return json.dumps(doc, sort_keys=True, separators=(",", ":"),
                      default=_jsonable) + "\n"


def _jsonable(obj):
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError("not JSON-serializable: %r" % (obj,))


def cmd_verify(args):
    try:
        with open(args.report) as f:
            doc = load_report(f.read())
    except OSError as e:
        return _usage("cannot read report: %s" % e)
    except ValueError as e:
        return _usage(str(e))
    failures = verify_report(doc)
    if failures:
        for msg in failures:
            sys.stdout.write("FAIL %s\n" % msg)
        return EXIT_DIFF
    sys.stdout.write("ok: %d orbits verified (%s)\n"
                     % (len(doc["orbits"]), doc["lattice"]["id"]))
    return EXIT_OK


def cmd_table(args):
    specs = _select(args)
    rows = []
    for spec in specs:
        doc = _load_doc(args, spec)
        if doc is not None:
            rows.append(doc["row"])
    if args.format == "json":
        import json
        sys.stdout.write(json.dumps({"schema": "dmrep.table/1",
                                     "rows": rows}, sort_keys=True,
                                    separators=(",", ":")) + "\n")
    elif args.format == "csv":
        sys.stdout.write(rows_to_csv(rows))
    else:
        sys.stdout.write(rows_to_markdown(rows))
    return EXIT_OK


def cmd_cache_gc(args):
    kept, removed = gc(args.cache_dir, wipe_all=args.all)
    _status("cache-gc: kept %d, removed %d" % (kept, removed))
    return EXIT_OK


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if e.code is not None else EXIT_USAGE
    handlers = {
        "solve": cmd_solve,
        "compare": cmd_compare,
        "verify": cmd_verify,
        "table": cmd_table,
        "cache-gc": cmd_cache_gc,
    }
    try:
        rc = handlers[args.verb](args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except BudgetExceeded as e:
        _status("budget exhausted: %s" % e)
        return EXIT_BUDGET
    except DmrepError as e:
        _status("error: %s" % e)
        return EXIT_DIFF
    return rc


if __name__ == "__main__":
    sys.exit(main())
