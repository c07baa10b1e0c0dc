"""Command-line interface.

Machine-readable output (JSON, or the bare converted text for
``convert``) goes to stdout; progress and human summaries go to stderr.
Exit codes: 0 success, 2 rejected input (precondition, format or
capacity), 3 internal invariant violation, 1 suite-level test failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .engine import catlin_color, trace_summary
from .errors import (
    CapacityError,
    FormatError,
    InternalInvariantViolation,
    PreconditionViolation,
)
from .formats import (
    decode_graph6,
    decode_json_graph,
    encode_graph6,
    encode_json_graph,
    parse_dimacs,
    write_dimacs,
)
from .generate import gnp, named, random_triangle_free_subcubic
from .graph import Graph
from .report import write_report
from .solvers import alpha_and_witness, brute_chromatic
from .suite import SCHEMA_VERSION, run_base_case_suite, run_theorem_suite
from .verify import verify_catlin

FORMATS = ("g6", "col", "json")

_DECODERS = {"g6": decode_graph6, "col": parse_dimacs, "json": decode_json_graph}
_ENCODERS = {"g6": encode_graph6, "col": write_dimacs, "json": encode_json_graph}
_SUFFIXES = {".g6": "g6", ".col": "col", ".json": "json"}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (PreconditionViolation, FormatError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catlin",
        description=(
            "Color a graph of maximum degree at most d (no complete subgraph"
            " on d+1 vertices) with d colors so that one color class is a"
            " maximum independent set."
        ),
    )
    parser.add_argument("--version", action="version", version=f"catlin {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    color = sub.add_parser("color", help="color one graph and print the result")
    _add_input_flags(color)
    color.add_argument(
        "-d", type=int, default=None,
        help="palette size (default: max(3, maximum degree))",
    )
    color.add_argument(
        "--verify", action="store_true",
        help="re-check the result against the exact solvers",
    )
    color.add_argument(
        "--trace", action="store_true", help="include the recursion trace"
    )
    color.set_defaults(handler=cmd_color)

    suite = sub.add_parser("suite", help="run the seeded corpora end to end")
    suite.add_argument("--count", type=int, default=10_000,
                       help="G(n,p) corpus size (default 10000)")
    suite.add_argument("--base-count", type=int, default=1_000,
                       help="triangle-free corpus size (default 1000)")
    suite.add_argument("--seed", type=int, default=None, help="corpus seed")
    suite.add_argument("--no-chi", action="store_true",
                       help="skip the brute-force chromatic cross-check")
    suite.add_argument("--report-dir", type=Path, default=None,
                       help="write runs.csv and summary figures here")
    suite.set_defaults(handler=cmd_suite)

    alpha = sub.add_parser("alpha", help="print the independence number")
    _add_input_flags(alpha)
    alpha.set_defaults(handler=cmd_alpha)

    chi = sub.add_parser("chi", help="print the chromatic number (small graphs)")
    _add_input_flags(chi)
    chi.set_defaults(handler=cmd_chi)

    convert = sub.add_parser("convert", help="translate between graph formats")
    _add_input_flags(convert)
    convert.add_argument("--to", choices=FORMATS, required=True,
                         help="output format")
    convert.add_argument("--out", type=Path, default=None,
                         help="output file (default: stdout)")
    convert.set_defaults(handler=cmd_convert)
    return parser


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--in", dest="infile", type=Path, help="input file")
    source.add_argument("--named", help="built-in graph name (e.g. petersen)")
    source.add_argument(
        "--gen", help='generator spec: "gnp:<n>,<p>" or "tfree:<n>"'
    )
    parser.add_argument(
        "--format", choices=FORMATS, default=None,
        help="input format (default: by file suffix, else g6)",
    )
    parser.add_argument("--seed", type=int, default=0, help="generator seed")


def _load_graph(args: argparse.Namespace) -> tuple[str, Graph]:
    if args.named is not None:
        return args.named, named(args.named)
    if args.gen is not None:
        return args.gen, _generate(args.gen, args.seed)
    path: Path = args.infile
    fmt = args.format or _SUFFIXES.get(path.suffix.lower(), "g6")
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return str(path), _DECODERS[fmt](text)


def _generate(spec: str, seed: int) -> Graph:
    kind, _, rest = spec.partition(":")
    try:
        if kind == "gnp":
            n_text, _, p_text = rest.partition(",")
            return gnp(int(n_text), float(p_text), seed)
        if kind == "tfree":
            return random_triangle_free_subcubic(int(rest), seed)
    except ValueError as exc:
        raise FormatError(f"bad generator spec {spec!r}: {exc}") from exc
    raise FormatError(f"unknown generator {kind!r}; use gnp or tfree")


def cmd_color(args: argparse.Namespace) -> int:
    source, g = _load_graph(args)
    d = args.d if args.d is not None else max(3, g.max_degree)
    start = time.perf_counter()
    result = catlin_color(g, d)
    millis = (time.perf_counter() - start) * 1000
    payload = {
        "schema_version": SCHEMA_VERSION,
        "source": source,
        "n": g.n,
        "d": d,
        "coloring": list(result.coloring.colors),
        "big_class": result.big_class,
        "big_class_size": result.big_class_size,
        "colors_used": result.coloring.colors_used(),
        "millis": round(millis, 3),
    }
    if args.verify:
        report = verify_catlin(g, result, d)
        payload["alpha"] = report.alpha
        payload["proper"] = report.proper
        payload["verification"] = report.to_dict()
        if not report.catlin_ok:
            print(json.dumps(payload))
            print("verification failed: " + "; ".join(report.failures), file=sys.stderr)
            return 3
    if args.trace:
        payload["trace"] = trace_summary(result.trace)
        payload["steps"] = [
            {
                "case": step.case,
                "n": step.n,
                "d": step.d,
                "case_tag": step.case_tag,
                "alpha_checked": step.alpha_checked,
                "augmentations": len(step.augmentations),
                "fallback_used": step.fallback_used,
                "initial_odd_cycles": step.initial_odd_cycles,
                "final_odd_cycles": step.final_odd_cycles,
            }
            for step in result.trace
        ]
    print(json.dumps(payload))
    print(
        f"colored {source}: n={g.n} d={d} big class {result.big_class}"
        f" has {result.big_class_size} vertices",
        file=sys.stderr,
    )
    return 0


def cmd_suite(args: argparse.Namespace) -> int:
    kwargs = {} if args.seed is None else {"seed": args.seed}

    def progress(done: int, total: int) -> None:
        if done and done % 1000 == 0:
            print(f"  ... {done}/{total}", file=sys.stderr)

    print(f"theorem suite: {args.count} graphs x palettes 3,4,5", file=sys.stderr)
    theorem = run_theorem_suite(
        args.count, compute_chi=not args.no_chi, progress=progress, **kwargs
    )
    print(
        f"theorem suite: {theorem.passed} passed, {theorem.failed} failed,"
        f" {theorem.skipped} skipped",
        file=sys.stderr,
    )
    print(f"base-case suite: {args.base_count} graphs", file=sys.stderr)
    base = run_base_case_suite(args.base_count, progress=progress, **kwargs)
    print(
        f"base-case suite: {base.passed} passed, {base.failed} failed,"
        f" {base.skipped} skipped",
        file=sys.stderr,
    )
    if args.report_dir is not None:
        for path in write_report([theorem, base], args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "suites": [theorem.to_dict(), base.to_dict()],
        "ok": theorem.ok and base.ok,
    }
    print(json.dumps(payload))
    for summary in (theorem, base):
        for g6 in summary.counterexamples:
            print(f"counterexample ({summary.name}): {g6}", file=sys.stderr)
    return 0 if payload["ok"] else 1


def cmd_alpha(args: argparse.Namespace) -> int:
    source, g = _load_graph(args)
    result = alpha_and_witness(g)
    print(result.alpha)
    print(f"{source}: independence number {result.alpha}", file=sys.stderr)
    return 0


def cmd_chi(args: argparse.Namespace) -> int:
    source, g = _load_graph(args)
    chi = brute_chromatic(g)
    print(chi)
    print(f"{source}: chromatic number {chi}", file=sys.stderr)
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    source, g = _load_graph(args)
    text = _ENCODERS[args.to](g)
    if not text.endswith("\n"):
        text += "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)
        print(f"wrote {args.out} ({args.to}, n={g.n})", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
