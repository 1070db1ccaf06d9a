"""Command-line interface.

Input files hold whitespace-separated integers: n, then either n degrees
or n (lower, upper) pairs. Use ``-`` to read standard input.

Exit codes: 0 positive answer or success, 1 negative answer, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import backend
from .bench import run_bench
from .certify import certificate, min_deviation_certificate
from .core import MAX_N, IntervalSequence, as_degrees, as_sequence
from .extensions import min_chebyshev, min_graphic_extension, min_relative_epsilon
from .graph_build import realize_graph
from .regular import most_regular_certificate
from .verify import is_graphic, is_realizable

INTERVAL_COMMANDS = ("realizable", "certify", "min-deviation", "most-regular")


class InputError(Exception):
    pass


def _read_tokens(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise InputError(f"non-integer token in {path}") from exc


def parse_input(path, pairs: bool):
    tokens = _read_tokens(path)
    if not tokens:
        raise InputError("empty input")
    n, body = tokens[0], tokens[1:]
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if n > MAX_N:
        raise InputError(f"n = {n} exceeds the supported maximum {MAX_N}")
    want = 2 * n if pairs else n
    if len(body) != want:
        raise InputError(f"expected {want} values after n = {n}, got {len(body)}")
    try:
        if pairs:
            return IntervalSequence(body[0::2], body[1::2])
        return as_sequence(body)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _fmt(seq) -> str:
    return " ".join(str(int(v)) for v in seq)


def _radius(r):
    return str(r) if isinstance(r, Fraction) else int(r)


def execute(args):
    """Run one command; returns (exit code, result dict, human text)."""
    cmd = args.command
    data = parse_input(args.input, pairs=cmd in INTERVAL_COMMANDS)

    if cmd == "check":
        ok = is_graphic(data)
        return (0 if ok else 1), {"status": "graphic" if ok else "not_graphic"}, (
            "graphic" if ok else "not graphic"
        )

    if cmd == "graph":
        if not is_graphic(data):
            return 1, {"status": "not_graphic"}, "not graphic"
        g = realize_graph(data)
        lines = [f"graphic: {g.n} vertices, {len(g.edges)} edges"]
        lines += [f"{u} {v}" for u, v in g.edge_list()]
        return 0, {
            "status": "graphic",
            "certificate": data.tolist(),
            "edges": len(g.edges),
            "edge_list": [list(e) for e in g.edge_list()],
        }, "\n".join(lines)

    if cmd == "extend":
        res = min_graphic_extension(data)
        return 0, {"status": "ok", "n0": res.n0, "certificate": res.degrees.tolist()}, (
            f"n0 {res.n0}\n{_fmt(res.degrees)}"
        )

    if cmd in ("chebyshev", "relative"):
        try:
            as_degrees(data)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        res = min_chebyshev(data) if cmd == "chebyshev" else min_relative_epsilon(data)
        label = "radius" if cmd == "chebyshev" else "epsilon"
        return 0, {"status": "ok", "radius": _radius(res.radius), "certificate": res.degrees.tolist()}, (
            f"{label} {res.radius}\n{_fmt(res.degrees)}"
        )

    if cmd == "realizable":
        ok = is_realizable(data)
        return (0 if ok else 1), {"status": "realizable" if ok else "not_realizable"}, (
            "realizable" if ok else "not realizable"
        )

    if cmd == "certify":
        res = certificate(data, args.mode)
        if res is None:
            return 1, {"status": "not_realizable"}, "not realizable"
        return 0, {
            "status": "realizable",
            "certificate": res.degrees.tolist(),
            "edges": res.edge_count,
        }, f"realizable: {res.edge_count} edges ({res.mode.value})\n{_fmt(res.degrees)}"

    if cmd == "min-deviation":
        res = min_deviation_certificate(data)
        dev = res.breakdown
        return 0, {
            "status": "ok",
            "certificate": res.degrees.tolist(),
            "deviation": {"lower": dev.lower, "upper": dev.upper, "total": dev.total},
        }, f"deviation {dev.total} (lower {dev.lower}, upper {dev.upper})\n{_fmt(res.degrees)}"

    if cmd == "most-regular":
        if not is_realizable(data):
            return 1, {"status": "not_realizable"}, "not realizable"
        res = most_regular_certificate(data)
        return 0, {"status": "ok", "certificate": res.degrees.tolist(), "spread": res.spread}, (
            f"spread {res.spread}\n{_fmt(res.degrees)}"
        )

    raise InputError(f"unknown command {cmd}")  # argparse guards this


def _emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _bench(args):
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        print(f"error: bad --sizes {args.sizes!r}", file=sys.stderr)
        return 2
    if not sizes or any(s < 1 or s > MAX_N for s in sizes):
        print(f"error: sizes must lie in [1, {MAX_N}]", file=sys.stderr)
        return 2
    names = ("numba", "numpy") if args.backend == "both" else (args.backend,)
    rows = ["size,backend,seconds,verdict"]
    for n, name, seconds, verdict in run_bench(sizes, args.seed, args.repeat, names, args.bench_command):
        rows.append(f"{n},{name},{seconds:.6f},{'realizable' if verdict else 'not_realizable'}")
    _emit("\n".join(rows), args.output)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="degreal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="input file, or - for standard input")
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.add_argument("-o", "--output", help="write output to this file")
        return p

    common(sub.add_parser("check", help="is a degree sequence graphic"))
    common(sub.add_parser("realizable", help="is an interval sequence realizable"))
    p = common(sub.add_parser("certify", help="graphic certificate inside a box"))
    p.add_argument("--mode", choices=("any", "sparsest", "densest"), default="any")
    common(sub.add_parser("min-deviation", help="graphic sequence of least deviation"))
    common(sub.add_parser("most-regular", help="graphic sequence of least spread"))
    common(sub.add_parser("extend", help="shortest graphic extension of a prefix"))
    common(sub.add_parser("chebyshev", help="nearest graphic sequence in max-norm"))
    common(sub.add_parser("relative", help="least relative tolerance"))
    common(sub.add_parser("graph", help="edge list realizing a graphic sequence"))

    b = sub.add_parser("bench", help="time certificate search on random boxes (CSV)")
    b.add_argument("--sizes", default="16384,32768,65536,131072")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--backend", choices=("numba", "numpy", "both"), default=backend.name())
    b.add_argument("--command", dest="bench_command", choices=("certify", "most-regular"), default="certify")
    b.add_argument("-o", "--output")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "bench":
        return _bench(args)
    try:
        code, payload, text = execute(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if args.json:
            _emit(json.dumps({"status": "error", "message": str(exc)}), args.output)
        return 2
    _emit(json.dumps(payload) if args.json else text, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
