"""Command-line front end.

Exit status: 0 success / all checks pass, 1 counterexample found, 2 usage
error.  JSON payloads use sorted keys and carry big integers as decimal
strings.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from math import gcd

from . import verify
from .cf_core import numerator
from .render import render
from .snake import build_snake, cf_from_snake, markov_number, replaceable_entries
from .trees import generate_tree

log = logging.getLogger("markovcf")

MAX_TREE_DEPTH = 12


class UsageError(Exception):
    pass


def parse_index(text: str) -> tuple[int, int]:
    try:
        p_str, q_str = text.split("/")
        p, q = int(p_str), int(q_str)
    except ValueError:
        raise UsageError(f"expected p/q, got {text!r}") from None
    if not 1 <= p < q:
        raise UsageError(f"need 1 <= p < q, got {p}/{q}")
    return p, q


def envelope(command: str, inputs: dict, result) -> str:
    return json.dumps({"command": command, "inputs": inputs, "result": result},
                      sort_keys=True, indent=2) + "\n"


def cmd_index(args) -> int:
    p, q = parse_index(args.index)
    cf = cf_from_snake(build_snake(p, q))
    result = {
        "p": p,
        "q": q,
        "gcd": gcd(p, q),
        "cf": list(cf.entries),
        "markov": str(numerator(cf)),
        "replaceable_count": len(replaceable_entries(cf)),
    }
    sys.stdout.write(envelope("index", {"index": args.index}, result))
    return 0


def snake_payload(g) -> dict:
    return {
        "tiles": [
            {"x": float(x), "y": float(y), "shaded": s}
            for (x, y), s in zip(g.tile_coords(), g.shaded)
        ],
        "moves": g.moves,
        "cf": list(cf_from_snake(g).entries),
    }


def cmd_snake(args) -> int:
    p, q = parse_index(args.index)
    g = build_snake(p, q)
    if args.format == "json":
        text = envelope("snake", {"index": args.index, "format": "json"}, snake_payload(g))
    else:
        text = render(g, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        log.info("wrote %s", args.output)
    else:
        sys.stdout.write(text)
    return 0


def _tree_json(node, kind: str) -> dict:
    if kind == "markov":
        triple = [str(v) for v in node.triple]
    else:
        triple = [f"{a}/{b}" for a, b in node.triple]
    return {
        "path": node.path,
        "triple": triple,
        "children": [_tree_json(c, kind) for c in node.children],
    }


def cmd_tree(args) -> int:
    if not 0 <= args.depth <= MAX_TREE_DEPTH:
        raise UsageError(f"depth must be between 0 and {MAX_TREE_DEPTH}")
    root = generate_tree(args.kind, args.depth)
    sys.stdout.write(envelope("tree", {"kind": args.kind, "depth": args.depth},
                              _tree_json(root, args.kind)))
    return 0


def _write_csv(path: str, header: list[str], rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    log.info("wrote %s", path)


def _index_rows(q_max: int, coprime_only: bool):
    for q in range(2, q_max + 1):
        for p in range(1, q):
            if coprime_only and gcd(p, q) != 1:
                continue
            yield p, q, gcd(p, q), str(markov_number(p, q))


def cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    if jobs < 1:
        raise UsageError("--jobs must be >= 1")
    inputs = {k: v for k, v in vars(args).items() if k not in ("func", "csv", "jobs", "verbose")}
    which = args.check
    if which == "identities":
        if args.trials < 1:
            raise UsageError("--trials must be >= 1")
        reports = verify.replacement_suites(args.trials, args.seed)
    elif which == "ordering":
        if args.max_q < 2:
            raise UsageError("--max-q must be >= 2")
        reports = [verify.sweep_ordering(args.max_q, args.include_noncoprime, jobs)]
        if args.csv:
            _write_csv(args.csv, ["p", "q", "gcd", "markov"],
                       _index_rows(args.max_q + 1, not args.include_noncoprime))
    elif which == "conjectures":
        if args.max_q < 2 or (args.max_i is not None and args.max_i < 1):
            raise UsageError("bounds must be positive")
        reports = [verify.sweep_conjectures(args.max_q, args.max_i, jobs)]
        if args.csv:
            _write_csv(args.csv, ["p", "q", "gcd", "markov"], _index_rows(args.max_q, True))
    elif which == "matchings":
        if not 3 <= args.max_sum <= 14:
            raise UsageError("--max-sum must be between 3 and 14")
        reports = [verify.cross_check_matchings(args.max_sum)]
        if args.csv:
            rows = [
                (p, s - p, gcd(p, s - p), str(markov_number(p, s - p)))
                for s in range(3, args.max_sum + 1)
                for p in range(1, (s + 1) // 2)
            ]
            _write_csv(args.csv, ["p", "q", "gcd", "markov"], rows)
    elif which == "structure":
        if args.max_q < 2:
            raise UsageError("--max-q must be >= 2")
        reports = [verify.check_snake_structure(args.max_q)]
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(which)

    passed = all(r.passed for r in reports)
    for r in reports:
        log.info("%s: %d cases, %d failures", r.name, r.cases_run, len(r.failures))
    result = {"passed": passed, "reports": [r.to_dict() for r in reports]}
    sys.stdout.write(envelope(f"verify {which}", inputs, result))
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markovcf",
        description="Markov numbers from Christoffel snake graphs and their continued fractions.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="Markov number and continued fraction of p/q")
    p.add_argument("index", help="p/q with 1 <= p < q")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("snake", help="draw or dump the snake graph of p/q")
    p.add_argument("index")
    p.add_argument("--format", choices=("ascii", "svg", "json"), default="ascii")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_snake)

    p = sub.add_parser("tree", help="Markov or Farey tree as nested JSON")
    p.add_argument("--kind", choices=("markov", "farey"), default="markov")
    p.add_argument("--depth", type=int, default=2)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("verify", help="run an exact verification suite")
    vsub = p.add_subparsers(dest="check", required=True)

    def common(sp, csv_ok=True):
        sp.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
        if csv_ok:
            sp.add_argument("--csv", help="also write one row per (p, q) to this file")
        sp.set_defaults(func=cmd_verify, csv=None)

    sp = vsub.add_parser("identities", help="randomised identity suites")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    common(sp, csv_ok=False)

    sp = vsub.add_parser("ordering", help="m_{p/q} below both neighbours, all p < q <= max-q")
    sp.add_argument("--max-q", type=int, default=40)
    sp.add_argument("--include-noncoprime", action=argparse.BooleanOptionalAction, default=True)
    common(sp)

    sp = vsub.add_parser("conjectures", help="fixed numerator / fixed denominator orderings")
    sp.add_argument("--max-q", type=int, default=40)
    sp.add_argument("--max-i", type=int, default=None)
    common(sp)

    sp = vsub.add_parser("matchings", help="brute-force matchings vs numerator vs tree")
    sp.add_argument("--max-sum", type=int, default=12)
    common(sp)

    sp = vsub.add_parser("structure", help="shape invariants of the snake graphs")
    sp.add_argument("--max-q", type=int, default=40)
    common(sp, csv_ok=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits 2 on bad usage
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except UsageError as e:
        parser.error(str(e))
    except ValueError as e:
        parser.error(str(e))


if __name__ == "__main__":
    sys.exit(main())
