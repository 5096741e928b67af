"""Command-line front end: solving, scanning, generating, constructing.

Exit codes are a stable contract: 0 success / no violation of the checked
bound, 1 a checked bound was violated (or --verify failed), 2 usage or
parse errors, 3 an exact-solver size cap was exceeded.

Scans fan records out to a worker pool (size from --workers or the
LOCDOM_WORKERS environment variable) and write results back in input order,
so reports are deterministic regardless of parallelism.  The half-order
bound is always evaluated as the exact integer comparison 2*gamma_L <= n.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Optional

from . import bounds, enumeration, extremal, locating
from .graph6 import Graph6Error, from_graph6, iter_graph6_lines, to_graph6
from .graphs import Graph, classify, corona, find_twins, is_connected, is_twin_free

DEFAULT_MAX_EXACT = 18

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_CAP = 3


@dataclass
class ScanRecord:
    graph6: str
    n: int
    twin_free: bool
    connected: bool
    gamma: Optional[int]
    gamma_l: Optional[int]
    half_bound_ok: Optional[bool]
    two_thirds_ok: Optional[bool]
    construction_sizes: dict[str, int] = field(default_factory=dict)
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "twin_free": self.twin_free,
            "connected": self.connected,
            "gamma": self.gamma,
            "gamma_l": self.gamma_l,
            "half_bound_ok": self.half_bound_ok,
            "two_thirds_ok": self.two_thirds_ok,
            "construction_sizes": dict(sorted(self.construction_sizes.items())),
            "elapsed_ms": self.elapsed_ms,
        }


CSV_FIELDS = [
    "graph6", "n", "twin_free", "connected", "gamma", "gamma_l",
    "half_bound_ok", "two_thirds_ok", "construction_sizes", "elapsed_ms",
]


def _fmt_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return ";".join(f"{k}={v}" for k, v in sorted(value.items()))
    return str(value)


def parse_csv_cell(name: str, text: str):
    """Inverse of the CSV cell formatting (used by the format-equivalence tests)."""
    if text == "":
        return None if name not in ("construction_sizes",) else {}
    if name in ("twin_free", "connected", "half_bound_ok", "two_thirds_ok"):
        return text == "true"
    if name == "construction_sizes":
        return {k: int(v) for k, v in (kv.split("=") for kv in text.split(";"))}
    if name in ("n", "gamma", "gamma_l", "elapsed_ms"):
        return int(text)
    return text


def scan_one(record: str, max_exact: int = DEFAULT_MAX_EXACT) -> ScanRecord:
    """Compute one ScanRecord from a graph6 record."""
    start = time.perf_counter()
    g = from_graph6(record)
    twin_free = is_twin_free(g)
    connected = is_connected(g)
    no_isolated = not g.isolated_vertices()

    gamma = gamma_l = None
    if g.n <= max_exact:
        gamma = len(locating.min_dominating_exact(g))
        gamma_l = locating.gamma_L_exact(g)[0]

    sizes: dict[str, int] = {}
    two_thirds_ok: Optional[bool] = None
    if twin_free and no_isolated:
        trace = bounds.construct_ld_two_thirds(g)
        sizes["two_thirds"] = len(trace.chosen)
        two_thirds_ok = 3 * len(trace.chosen) <= 2 * g.n
        sizes["vertex_cover"] = bounds.ld_from_vertex_cover(g).size
        kinds = classify(g)
        if kinds.is_split:
            sizes["split"] = bounds.construct_ld_split(g).size
        if kinds.is_cobipartite:
            sizes["cobipartite"] = bounds.construct_ld_cobipartite(g).size

    half_ok = None if gamma_l is None else (2 * gamma_l <= g.n)
    elapsed = int((time.perf_counter() - start) * 1000)
    return ScanRecord(
        graph6=record, n=g.n, twin_free=twin_free, connected=connected,
        gamma=gamma, gamma_l=gamma_l, half_bound_ok=half_ok,
        two_thirds_ok=two_thirds_ok, construction_sizes=sizes, elapsed_ms=elapsed,
    )


def scan_records(
    records: list[str],
    max_exact: int = DEFAULT_MAX_EXACT,
    workers: int = 1,
) -> list[ScanRecord]:
    """Scan graph6 records, preserving input order in the output."""
    if workers > 1 and len(records) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(partial(scan_one, max_exact=max_exact), records, chunksize=64))
    return [scan_one(r, max_exact=max_exact) for r in records]


def _violations(records: list[ScanRecord], check: str) -> list[ScanRecord]:
    bad = []
    for rec in records:
        if check in ("half", "both") and rec.half_bound_ok is False:
            bad.append(rec)
        elif check in ("two-thirds", "both") and rec.two_thirds_ok is False:
            bad.append(rec)
    return bad


def _write_report(path: str, records: list[ScanRecord]) -> None:
    if path.endswith(".json"):
        with open(path, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec.to_dict()) + "\n")
    elif path.endswith(".csv"):
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_FIELDS)
            for rec in records:
                d = rec.to_dict()
                writer.writerow([_fmt_cell(d[name]) for name in CSV_FIELDS])
    else:
        raise ValueError(f"report path must end in .csv or .json: {path}")


# -- subcommands -----------------------------------------------------------------

def _sorted_set(s) -> list[int]:
    return sorted(s)


def cmd_solve(args: argparse.Namespace) -> int:
    g = from_graph6(args.graph6)
    if g.n > args.max_exact:
        print(f"order {g.n} exceeds the exact-solver cap {args.max_exact} "
              f"(raise with --max-exact)", file=sys.stderr)
        return EXIT_CAP
    twins = find_twins(g)
    gamma_set = locating.min_dominating_exact(g)
    gamma_l, witness = locating.gamma_L_exact(g)
    no_isolated = not g.isolated_vertices()

    constructions = {}
    if not twins and no_isolated:
        trace = bounds.construct_ld_two_thirds(g)
        constructions["two_thirds"] = locating.certify(g, trace.chosen, "two_thirds")
        constructions["vertex_cover"] = bounds.ld_from_vertex_cover(g)
        kinds = classify(g)
        if kinds.is_split:
            constructions["split"] = bounds.construct_ld_split(g)
        if kinds.is_cobipartite:
            constructions["cobipartite"] = bounds.construct_ld_cobipartite(g)

    if args.json:
        payload = {
            "graph6": args.graph6,
            "n": g.n,
            "edges": g.num_edges,
            "twin_pairs": [[u, v, kind] for u, v, kind in twins],
            "gamma": len(gamma_set),
            "gamma_witness": _sorted_set(gamma_set),
            "gamma_l": gamma_l,
            "gamma_l_witness": _sorted_set(witness),
            "constructions": {
                name: {
                    "size": cert.size,
                    "set": _sorted_set(cert.set),
                    "verified": cert.is_locating_dominating,
                }
                for name, cert in constructions.items()
            },
        }
        print(json.dumps(payload))
        return EXIT_OK

    print(f"graph6: {args.graph6}")
    print(f"n: {g.n}  edges: {g.num_edges}")
    if twins:
        print("twins: " + ", ".join(f"({u},{v},{kind})" for u, v, kind in twins))
    else:
        print("twins: none (twin-free)")
    print(f"gamma: {len(gamma_set)}  witness: {_sorted_set(gamma_set)}")
    print(f"gamma_L: {gamma_l}  witness: {_sorted_set(witness)}")
    if constructions:
        print("constructions:")
        for name, cert in constructions.items():
            status = "verified" if cert.is_locating_dominating else "FAILED VERIFICATION"
            print(f"  {name}: size {cert.size}, {status}, set {_sorted_set(cert.set)}")
    else:
        print("constructions: skipped (twins or isolated vertices present)")
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    try:
        with open(args.file, "r", encoding="ascii") as fh:
            numbered = list(iter_graph6_lines(fh))
    except OSError as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    records_in = []
    for lineno, rec in numbered:
        try:
            g = from_graph6(rec)
        except Graph6Error as exc:
            print(f"{args.file}:{lineno}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        if args.connected_only and not is_connected(g):
            continue
        if args.twin_free_only and not is_twin_free(g):
            continue
        records_in.append(rec)

    workers = args.workers or int(os.environ.get("LOCDOM_WORKERS", "1"))
    records = scan_records(records_in, max_exact=args.max_exact, workers=workers)

    if args.out:
        _write_report(args.out, records)
    if args.json:
        for rec in records:
            print(json.dumps(rec.to_dict()))

    bad = _violations(records, args.check)
    extremal_recs = [r for r in records if r.gamma_l is not None and 2 * r.gamma_l == r.n]
    summary = sys.stderr if args.json else sys.stdout
    print(f"scanned {len(records)} graphs "
          f"(twin-free {sum(r.twin_free for r in records)}, "
          f"connected {sum(r.connected for r in records)})", file=summary)
    print(f"extremal (2*gamma_L = n): {len(extremal_recs)}", file=summary)
    for rec in extremal_recs:
        print(f"  {rec.graph6} n={rec.n} gamma_L={rec.gamma_l}", file=summary)
    if bad:
        print(f"VIOLATIONS of the {args.check} check: {len(bad)}", file=summary)
        for rec in bad:
            print(f"  {rec.graph6} n={rec.n} gamma_L={rec.gamma_l} "
                  f"half_ok={rec.half_bound_ok} two_thirds_ok={rec.two_thirds_ok}", file=summary)
        return EXIT_VIOLATION
    print("no violations", file=summary)
    return EXIT_OK


def _verify_family(family: str, g: Graph, params, max_exact: int) -> list[str]:
    """Family-specific expected-value checks; returns failure messages."""
    failures = []
    exact_ok = g.n <= max_exact

    def expect(cond: bool, message: str) -> None:
        if not cond:
            failures.append(message)

    if family in ("hk", "ak", "join-ak", "t-tree", "attach-demo"):
        expect(is_twin_free(g), "expected a twin-free graph")
    if family == "hk":
        k = params[0]
        expect(g.n == 2 * k + 4, f"expected order {2 * k + 4}")
        if exact_ok:
            expect(len(locating.min_dominating_exact(g)) == 2, "expected domination number 2")
            expect(locating.gamma_L_exact(g)[0] == k + 2, f"expected gamma_L {k + 2}")
    elif family == "ak":
        k = params[0]
        expect(classify(g).is_cobipartite, "expected a co-bipartite graph")
        expect(locating.is_locating_dominating(g, extremal.path_power_witness(k)),
               "standard witness failed verification")
        if exact_ok:
            expect(locating.gamma_L_exact(g)[0] == k, f"expected gamma_L {k}")
    elif family == "join-ak":
        total = sum(params)
        if exact_ok:
            expect(locating.gamma_L_exact(g)[0] == total, f"expected gamma_L {total}")
    elif family == "corona":
        base_n = g.n // 2
        if exact_ok:
            expect(len(locating.min_dominating_exact(g)) == base_n,
                   f"expected domination number {base_n}")
            expect(locating.gamma_L_exact(g)[0] == base_n, f"expected gamma_L {base_n}")
    elif family == "star-gadget":
        p = params[0]
        expect(classify(g).is_tree, "expected a tree")
        if exact_ok:
            expect(locating.gamma_L_exact(g)[0] == p + 1, f"expected gamma_L {p + 1}")
    elif family == "t-tree":
        cert = extremal.tree_family_certificate(g)
        expect(cert is not None, "generated tree rejected by the family recognizer")
        if exact_ok:
            expect(locating.gamma_L_exact(g)[0] == g.n // 2, f"expected gamma_L {g.n // 2}")
    elif family == "attach-demo":
        _, half_set = extremal.demo_assembly()
        expect(locating.is_locating_dominating(g, half_set),
               "standard half-order set failed verification")
        expect(2 * len(half_set) == g.n, "standard set is not half the order")
        if exact_ok:
            expect(2 * locating.gamma_L_exact(g)[0] >= g.n, "expected gamma_L >= n/2")
    return failures


def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    params: list[int] = []
    try:
        if family == "hk":
            (k,) = args.params
            params = [int(k)]
            graphs = [extremal.two_hub_graph(params[0])]
        elif family == "ak":
            (k,) = args.params
            params = [int(k)]
            graphs = [extremal.path_power_graph(params[0])]
        elif family == "join-ak":
            if not args.params:
                raise ValueError("join-ak needs at least one k")
            params = [int(k) for k in args.params]
            graphs = [extremal.join_of_path_powers(params)]
        elif family == "corona":
            (record,) = args.params
            graphs = [corona(from_graph6(record))]
        elif family == "star-gadget":
            (p,) = args.params
            params = [int(p)]
            graphs = [extremal.attachable_star(params[0])[0]]
        elif family == "t-tree":
            (size,) = args.params
            params = [int(size)]
            graphs = [extremal.random_extremal_tree(params[0], args.seed)]
        elif family == "attach-demo":
            if args.params:
                raise ValueError("attach-demo takes no parameters")
            graphs = [extremal.demo_assembly()[0]]
        else:
            raise ValueError(f"unknown family {family}")
    except (ValueError, Graph6Error) as exc:
        print(f"gen {family}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    lines = [to_graph6(g) for g in graphs]
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            print(line)

    if args.verify:
        for g in graphs:
            failures = _verify_family(family, g, params, args.max_exact)
            if failures:
                for msg in failures:
                    print(f"verify {family}: {msg}", file=sys.stderr)
                return EXIT_VIOLATION
        print(f"verify {family}: ok", file=sys.stderr)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace) -> int:
    g = from_graph6(args.graph6)
    method = args.method
    if method == "auto":
        kinds = classify(g)
        method = "split" if kinds.is_split else (
            "cobipartite" if kinds.is_cobipartite else "two-thirds")

    if method == "two-thirds":
        trace = bounds.construct_ld_two_thirds(g)
        if args.json:
            print(json.dumps({
                "method": "two_thirds",
                "s0": _sorted_set(trace.s0),
                "d": _sorted_set(trace.d),
                "singleton_part_vertices": _sorted_set(trace.sig.singletons),
                "candidate_a": _sorted_set(trace.candidate_a),
                "candidate_b": _sorted_set(trace.candidate_b),
                "chosen": _sorted_set(trace.chosen),
                "size": len(trace.chosen),
                "verified": True,
            }))
        else:
            print("method: two_thirds")
            print(f"  initial dominating set: {_sorted_set(trace.s0)}")
            print(f"  augmented set: {_sorted_set(trace.d)}")
            print(f"  singleton-part vertices: {_sorted_set(trace.sig.singletons)}")
            print(f"  candidate_a (size {len(trace.candidate_a)}): {_sorted_set(trace.candidate_a)}")
            print(f"  candidate_b (size {len(trace.candidate_b)}): {_sorted_set(trace.candidate_b)}")
            print(f"  chosen (size {len(trace.chosen)}, verified): {_sorted_set(trace.chosen)}")
        return EXIT_OK

    runner = {
        "vertex-cover": bounds.ld_from_vertex_cover,
        "split": bounds.construct_ld_split,
        "cobipartite": bounds.construct_ld_cobipartite,
    }[method]
    cert = runner(g)
    if args.json:
        print(json.dumps({
            "method": cert.method,
            "set": _sorted_set(cert.set),
            "size": cert.size,
            "verified": cert.is_locating_dominating,
        }))
    else:
        print(f"method: {cert.method}")
        print(f"  set (size {cert.size}, verified): {_sorted_set(cert.set)}")
    return EXIT_OK


def cmd_enum(args: argparse.Namespace) -> int:
    if args.trees:
        graphs = enumeration.trees(args.n)
    else:
        graphs = enumeration.connected_graphs(args.n)
    if args.twin_free_only:
        graphs = tuple(g for g in graphs if is_twin_free(g))
    lines = [to_graph6(g) for g in graphs]
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))
    else:
        for line in lines:
            print(line)
    print(f"enumerated {len(lines)} graphs", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="locdom",
        description="Locating-dominating sets in twin-free graphs: exact solvers, "
                    "constructions, extremal families, and conjecture scans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="exact parameters of one graph6 record")
    p_solve.add_argument("graph6")
    p_solve.add_argument("--json", action="store_true")
    p_solve.add_argument("--max-exact", type=int, default=DEFAULT_MAX_EXACT)
    p_solve.set_defaults(func=cmd_solve)

    p_scan = sub.add_parser("scan", help="scan a graph6 file and check bounds")
    p_scan.add_argument("file")
    p_scan.add_argument("--connected-only", action="store_true")
    p_scan.add_argument("--twin-free-only", action="store_true")
    p_scan.add_argument("--check", choices=["half", "two-thirds", "both"], default="both")
    p_scan.add_argument("--out", help="write a .csv or .json report")
    p_scan.add_argument("--json", action="store_true", help="JSON record per line on stdout")
    p_scan.add_argument("--max-exact", type=int, default=DEFAULT_MAX_EXACT)
    p_scan.add_argument("--workers", type=int, default=0,
                        help="worker processes (default: LOCDOM_WORKERS or 1)")
    p_scan.set_defaults(func=cmd_scan)

    p_gen = sub.add_parser("gen", help="generate an extremal family member")
    p_gen.add_argument("family", choices=["hk", "ak", "join-ak", "corona",
                                          "star-gadget", "t-tree", "attach-demo"])
    p_gen.add_argument("params", nargs="*")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out")
    p_gen.add_argument("--verify", action="store_true")
    p_gen.add_argument("--max-exact", type=int, default=DEFAULT_MAX_EXACT)
    p_gen.set_defaults(func=cmd_gen)

    p_con = sub.add_parser("construct", help="run a constructive bound with its trace")
    p_con.add_argument("graph6")
    p_con.add_argument("--method", choices=["two-thirds", "vertex-cover", "split",
                                            "cobipartite", "auto"], default="auto")
    p_con.add_argument("--json", action="store_true")
    p_con.set_defaults(func=cmd_construct)

    p_enum = sub.add_parser("enum", help="enumerate small graphs (fixture helper)")
    p_enum.add_argument("n", type=int)
    p_enum.add_argument("--trees", action="store_true")
    p_enum.add_argument("--twin-free-only", action="store_true")
    p_enum.add_argument("--out")
    p_enum.set_defaults(func=cmd_enum)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"graph6 parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
