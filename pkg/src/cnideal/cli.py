"""Command-line entry point: ``cnideal <command> [options]``.

Exit status: 0 success, 1 confirmed violation (scan only), 2 operational error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import corpus
from .domination import invariants, is_efficient_dominating
from .graph import Graph, from_edge_list, from_graph6, parse_family, read_graph6_lines, to_graph6
from .hamming import (
    code_graph,
    hamming_code,
    hamming_graph_invariants,
    is_perfect,
    v_number_bounds_hamming,
)
from .bits import members
from .graph import MAX_VERTICES
from .monomial import associated_primes, v_number_bruteforce
from .regularity import FIELDS, betti_table
from .scan import ScanConfig, csv_summary, report, scan, summarize
from .vnumber import v_number

log = logging.getLogger("cnideal")


def _looks_like_edge_list(text: str) -> bool:
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return all(tok.lstrip("-").isdigit() for tok in line.split())
    return False


def load_graph(args) -> Graph:
    sources = [x for x in (args.input, args.family, args.graph6) if x]
    if len(sources) != 1:
        raise ValueError("give exactly one of --input, --family, --graph6")
    if args.graph6:
        return from_graph6(args.graph6)
    if args.family:
        return parse_family(args.family)
    text = Path(args.input).read_text(encoding="utf-8")
    if _looks_like_edge_list(text):
        return from_edge_list(text)
    first = next((ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
    return from_graph6(first)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=False))
        return
    flat = {}
    for key, value in payload.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value, separators=(",", ":"))
        flat[key] = value
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(flat), lineterminator="\n")
    writer.writeheader()
    writer.writerow(flat)
    sys.stdout.write(buf.getvalue())


def cmd_invariants(args) -> int:
    _emit(invariants(load_graph(args)).to_json(), args.format)
    return 0


def cmd_vnumber(args) -> int:
    _emit(v_number(load_graph(args)).to_json(), args.format)
    return 0


def cmd_oracle(args) -> int:
    g = load_graph(args)
    value, a, d = v_number_bruteforce(g, cap=args.oracle_cap)
    _emit(
        {
            "v_bruteforce": value,
            "witness_A": list(members(a)),
            "witness_D": list(members(d)),
            "associated_prime_count": len(associated_primes(g)),
        },
        args.format,
    )
    return 0


def cmd_regularity(args) -> int:
    table = betti_table(load_graph(args), args.field, args.reg_cap)
    _emit({"reg": table.reg, "pd": table.pd, "field": args.field, "betti": table.to_json()}, args.format)
    return 0


def cmd_hamming(args) -> int:
    code = hamming_code(args.q, args.r)
    explicit = code.codewords is not None
    efficient = None
    if explicit and args.q ** code.n <= MAX_VERTICES:
        efficient = is_efficient_dominating(code_graph(code), code.vertex_set())
    inv = hamming_graph_invariants(code.n, args.q)
    bounds = v_number_bounds_hamming(args.q, args.r)
    _emit(
        {
            "n": code.n,
            "k": code.k,
            "delta": code.min_dist,
            "codeword_count": len(code.codewords) if explicit else code.size,
            "perfect": is_perfect(code.codewords, code.n, args.q, 1) if explicit else None,
            "efficient_dominating": efficient,
            "gamma": inv["gamma"],
            "indep": inv["indep"],
            "tau": inv["tau"],
            "v_lower": bounds["lower"],
            "v_upper": bounds["upper"],
        },
        args.format,
    )
    return 0


def _scan_inputs(args):
    if args.input and args.family:
        raise ValueError("give --input or --family, not both")
    if args.input:
        path = Path(args.input)
        with path.open(encoding="utf-8") as fh:
            for lineno, text, item in read_graph6_lines(fh):
                if isinstance(item, Exception):
                    log.warning("%s:%d: skipped malformed graph6: %s", path, lineno, item)
                    continue
                yield text, item
        return
    if not args.family:
        raise ValueError("scan needs --input or --family")
    name = args.family.partition(":")[0]
    graphs = corpus.parse_corpus(args.family) if name in corpus.CORPORA else [parse_family(args.family)]
    for g in graphs:
        yield to_graph6(g), g


def cmd_scan(args) -> int:
    config = ScanConfig(
        max_n=args.max_n,
        field=args.field,
        jobs=args.jobs,
        timeout_secs=args.timeout_secs,
        reg_cap=args.reg_cap,
        oracle_cap=args.oracle_cap,
    )
    records = scan(_scan_inputs(args), config)
    if args.out:
        records = report(records, Path(args.out))
    else:
        records = list(records)
    summary = summarize(records)
    if args.format == "csv":
        sys.stdout.write(csv_summary(records))
    else:
        print(json.dumps(summary))
    return 1 if summary["confirmed_violations"] else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="graph6 file (scan) or graph6/edge-list file")
    common.add_argument("--family", help="e.g. path:6, kpartite:2,3, hamming:3,2; scan also takes connected:7, trees:9, chordal:8")
    common.add_argument("--graph6", help="a single graph6 string")
    common.add_argument("--field", choices=FIELDS, default="gf2")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--timeout-secs", type=float, default=30.0)
    common.add_argument("--out", help="scan output JSONL path; a CSV summary goes next to it")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--reg-cap", type=int, default=14)
    common.add_argument("--oracle-cap", type=int, default=20)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="cnideal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, help_ in (
        ("invariants", cmd_invariants, "domination, cover, independence and matching numbers"),
        ("vnumber", cmd_vnumber, "v-number with witness (D, U)"),
        ("oracle", cmd_oracle, "brute-force colon-ideal v-number"),
        ("regularity", cmd_regularity, "regularity, projective dimension and Betti table"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
    p = sub.add_parser("hamming", parents=[common], help="Hamming code and Hamming graph closed forms")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_hamming)
    p = sub.add_parser("scan", parents=[common], help="check every inequality over a corpus")
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_scan, oracle_cap=10)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"cnideal: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
