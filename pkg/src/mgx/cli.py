"""Command-line entry point: ``mgx charpoly|inertia|classify|gen|verify``.

Exit status is 0 on success, 1 when a verification fails (or the two inertia
methods disagree) and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import random
import sys

from . import generators as gen
from .elementary import EnumerationCapError, charpoly_by_enumeration
from .graph import GraphError, load_graph, to_json_dict, to_mg
from .spectra import graph_charpoly, graph_inertia
from .structure import StructureError, classification_summary
from .suites import SUITES, SuiteResult, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_charpoly(args) -> int:
    g = load_graph(args.file)
    poly = charpoly_by_enumeration(g) if args.oracle == "enumeration" else graph_charpoly(g)
    if args.json:
        _dump({"n": g.n, "coeffs": list(poly.coeffs), "method": args.oracle})
    else:
        print(poly)
    return EXIT_OK


def cmd_inertia(args) -> int:
    g = load_graph(args.file)
    methods = ["descartes", "congruence"] if args.method == "both" else [args.method]
    found = {m: graph_inertia(g, m) for m in methods}
    agree = len(set(found.values())) == 1
    if args.json:
        out = {m: list(v.as_tuple()) for m, v in found.items()}
        if len(methods) > 1:
            out["agree"] = agree
        _dump(out)
    else:
        for m, v in found.items():
            print(f"{m}\t{v.p_plus}\t{v.n_minus}\t{v.nullity}")
    return EXIT_OK if agree else EXIT_FAIL


def cmd_classify(args) -> int:
    summary = classification_summary(load_graph(args.file))
    if args.json:
        _dump(summary)
    else:
        for key, value in summary.items():
            print(f"{key}: {json.dumps(value, sort_keys=True)}")
    return EXIT_OK


def cmd_gen(args) -> int:
    spec = gen.GeneratorSpec(args.family, args.n, args.extra, args.count, args.seed)
    graphs = list(gen.generate(spec))
    if args.orient == "random":
        rng = random.Random(f"orient:{args.seed}")
        graphs = [gen.random_orientation(g, rng) for g in graphs]
    elif args.orient == "all":
        graphs = [h for g in graphs for h in gen.enumerate_orientations(g)]
    if args.output and args.output.endswith(".json"):
        text = json.dumps([to_json_dict(g) for g in graphs], sort_keys=True) + "\n"
    else:
        text = "".join(to_mg(g) for g in graphs)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def write_report(result: SuiteResult, directory: str) -> list[str]:
    """JSON report, per-vertex-count TSV table and a strata figure."""
    from .plotting import plot_strata

    os.makedirs(directory, exist_ok=True)
    base = os.path.join(directory, result.suite)
    with open(base + ".json", "w") as fh:
        json.dump(result.to_json(), fh, sort_keys=True, indent=1)
        fh.write("\n")
    with open(base + ".tsv", "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["n", "checked", "failed"])
        w.writerows(result.strata_rows())
    plot_strata(result, base + ".png")
    return [base + ext for ext in (".json", ".tsv", ".png")]


def cmd_verify(args) -> int:
    result = run_suite(args.suite, args.max_n, args.samples, args.seed, args.orientation_cap)
    if args.json:
        _dump(result.to_json())
    else:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status}\t{result.suite}\tchecked={result.checked}\t"
              f"failures={result.failure_count}\tmillis={result.millis}")
        for f in result.failures:
            print(json.dumps(f, sort_keys=True))
        if result.note_count:
            print(f"notes={result.note_count}")
    if args.report_dir:
        for path in write_report(result, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    return EXIT_OK if result.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mgx", description="Exact spectra and inertia of mixed graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("charpoly", help="characteristic polynomial coefficients a_0..a_n")
    s.add_argument("file")
    s.add_argument("--oracle", choices=["enumeration"], default=None,
                   help="use the elementary subgraph expansion instead")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_charpoly)

    s = sub.add_parser("inertia", help="(p+, n-, nullity) of the Hermitian adjacency matrix")
    s.add_argument("file")
    s.add_argument("--method", choices=["descartes", "congruence", "both"], default="descartes")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_inertia)

    s = sub.add_parser("classify", help="matching, bounds and structural predicates")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("gen", help="write graphs of a family in .mg (or .json) format")
    s.add_argument("family", choices=gen.FAMILIES)
    s.add_argument("n", type=int)
    s.add_argument("--extra", type=int, default=0, help="chords added by random_connected")
    s.add_argument("--count", type=int, default=1, help="graphs drawn by random families")
    s.add_argument("--orient", choices=["none", "random", "all"], default="none")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=list(SUITES))
    s.add_argument("--max-n", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--orientation-cap", type=int,
                   help="orientations per census graph before sampling")
    s.add_argument("--json", action="store_true")
    s.add_argument("--report-dir", help="also write SUITE.json, SUITE.tsv and SUITE.png here")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (GraphError, StructureError, EnumerationCapError, OSError) as exc:
        print(f"mgx: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"mgx: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
