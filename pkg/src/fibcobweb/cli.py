"""Command-line front end: every computation behind one `cobweb` command.

Results go to stdout (or --out), diagnostics to stderr. Exit codes: 0 on
success, 1 on verification failure, 2 on usage errors, 3 when a desk-scale
guard is exceeded (override with --unsafe-limits). Numbers are emitted as
exact decimal strings; output for a fixed invocation is byte-identical
across runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import List, Optional, Sequence

from . import __version__, cobweb, fence, gvpaths, tiling, verify, weighted
from .guards import GuardExceeded, ensure_within
from .seqcore import f_falling, fibonomial
from .tiling import TilingSolution


TEXT_MATRIX_LIMIT = 12
HASSE_LIMIT = 10


def _universe_size(k: int, m: int) -> int:
    """Chain universe size above a level-k root up to level k+m."""
    return f_falling(k + m, m)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cobweb",
        description="Exact Fibonacci cobweb poset combinatorics",
    )
    parser.add_argument("--version", action="version", version=f"cobweb {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json", "csv", "dot"),
        default="text",
        help="output format (dot is valid only for graph-producing commands)",
    )
    common.add_argument("--out", metavar="PATH", help="write output to PATH")
    common.add_argument(
        "--unsafe-limits",
        action="store_true",
        help="override desk-scale guards (prints a warning)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fibonomial", parents=[common], help="Fibonomial coefficients")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("--triangle", type=int, metavar="ROWS", help="print rows 0..ROWS")

    p = sub.add_parser("zeta", parents=[common], help="order-indicator matrix")
    p.add_argument("n", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--explicit", action="store_true", help="delta-expansion build")
    group.add_argument("--order", action="store_true", help="comparability build (default)")
    p.add_argument("--check", action="store_true", help="build both ways and compare")

    p = sub.add_parser("mobius", parents=[common], help="Mobius matrix")
    p.add_argument("n", type=int)

    p = sub.add_parser("chains", parents=[common], help="maximal chains between levels")
    p.add_argument("k", type=int, help="start level (first vertex of the level)")
    p.add_argument("n", type=int, help="target level")
    p.add_argument("--enumerate", action="store_true", help="list the chains")

    p = sub.add_parser("tiling", parents=[common], help="max-disjoint copy tiling")
    p.add_argument("k", type=int, help="root level")
    p.add_argument("r", type=int, help="root position within level k")
    p.add_argument("m", type=int, help="copy height")
    p.add_argument("--count-all", action="store_true", help="count every tiling")

    p = sub.add_parser("gv", parents=[common], help="path-determinant Fibonomial sum")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = sub.add_parser("konvalina", parents=[common], help="weighted-box coefficients")
    p.add_argument("kind", choices=("first", "second"))
    p.add_argument("k", type=int)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--weights", metavar="W1,W2,...", help="explicit weight vector")
    group.add_argument(
        "--preset",
        metavar="KIND:N[:Q]",
        help="ones:N, arithmetic:N, or geometric:N:Q",
    )

    p = sub.add_parser("fence", parents=[common], help="fence-poset ideal count")
    p.add_argument("m", type=int)

    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram export")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", parents=[common], help="run self-verification suites")
    p.add_argument(
        "--suite", choices=verify.SUITE_NAMES, default="all", help="suite to run"
    )
    return parser


def _stringify(value):
    """Ints become exact decimal strings (floats never appear)."""
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _stringify(v) for k, v in value.items()}
    return value


def _record(command: str, inputs: dict, result) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "version": __version__,
    }


class _Output:
    """Rendered output destined for stdout or --out."""

    def __init__(self, args):
        self.format = args.format
        self.path = args.out

    def write(self, text: str) -> None:
        if self.path:
            with open(self.path, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)

    def emit(self, record, text_lines, csv_rows=None, dot_text=None) -> None:
        if self.format == "text":
            self.write("\n".join(text_lines) + "\n")
        elif self.format == "json":
            self.write(json.dumps(_stringify(record), sort_keys=True) + "\n")
        elif self.format == "csv":
            if csv_rows is None:
                raise ValueError("csv output is not available for this command")
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerows(csv_rows)
            self.write(buf.getvalue())
        else:
            if dot_text is None:
                raise ValueError("dot output is valid only for graph-producing commands")
            self.write(dot_text)


def _coord_text(v: cobweb.VertexCoord) -> str:
    return f"{v.j},{v.s}"


def _cmd_fibonomial(args, out: _Output) -> int:
    if args.triangle is not None:
        if args.triangle < 0:
            raise ValueError("--triangle rows must be >= 0")
        rows = [
            [fibonomial(n, k) for k in range(n + 1)] for n in range(args.triangle + 1)
        ]
        record = _record("fibonomial", {"triangle": args.triangle}, rows)
        out.emit(record, [" ".join(map(str, row)) for row in rows], rows)
        return 0
    if args.n is None:
        raise ValueError("fibonomial needs N (with optional K) or --triangle ROWS")
    if args.k is None:
        row = [fibonomial(args.n, k) for k in range(args.n + 1)]
        record = _record("fibonomial", {"n": args.n}, row)
        out.emit(record, [" ".join(map(str, row))], [row])
        return 0
    value = fibonomial(args.n, args.k)
    record = _record("fibonomial", {"n": args.n, "k": args.k}, value)
    out.emit(record, [str(value)], [[value]])
    return 0


def _matrix_guard(n: int, unsafe: bool) -> None:
    # matrix dimension grows like phi^n; the dump itself becomes the bottleneck
    ensure_within("matrix dump level", n, TEXT_MATRIX_LIMIT, unsafe)


def _cmd_zeta(args, out: _Output) -> int:
    _matrix_guard(args.n, args.unsafe_limits)
    poset = cobweb.build(args.n)
    if args.check:
        diff = cobweb.zeta_from_order(poset).first_difference(cobweb.zeta_explicit(poset))
        if diff is not None:
            print(f"zeta construction mismatch at (row, col) = {diff}", file=sys.stderr)
            return 1
        record = _record(
            "zeta", {"n": args.n, "check": True}, {"equal": True, "dim": poset.vertex_count}
        )
        out.emit(record, [f"zeta check N={args.n}: OK"], [["OK", poset.vertex_count]])
        return 0
    builder = cobweb.zeta_explicit if args.explicit else cobweb.zeta_from_order
    matrix = builder(poset)
    mode = "explicit" if args.explicit else "order"
    record = _record(
        "zeta", {"n": args.n, "build": mode}, [list(row) for row in matrix.rows]
    )
    out.emit(record, matrix.dump().split("\n"), [list(row) for row in matrix.rows])
    return 0


def _cmd_mobius(args, out: _Output) -> int:
    _matrix_guard(args.n, args.unsafe_limits)
    matrix = cobweb.mobius(cobweb.build(args.n))
    record = _record("mobius", {"n": args.n}, [list(row) for row in matrix.rows])
    out.emit(record, matrix.dump().split("\n"), [list(row) for row in matrix.rows])
    return 0


def _cmd_chains(args, out: _Output) -> int:
    poset = cobweb.build(max(args.n, args.k, 1))
    start = cobweb.VertexCoord(1, args.k)
    if args.enumerate:
        chains = cobweb.enumerate_max_chains(poset, start, args.n, args.unsafe_limits)
        listed = [[[v.j, v.s] for v in chain] for chain in chains]
        record = _record("chains", {"k": args.k, "n": args.n, "enumerate": True}, listed)
        out.emit(
            record,
            [" ".join(_coord_text(v) for v in chain) for chain in chains],
            [[_coord_text(v) for v in chain] for chain in chains],
        )
        return 0
    value = cobweb.count_max_chains_from_vertex(poset, start, args.n)
    record = _record("chains", {"k": args.k, "n": args.n}, value)
    out.emit(record, [str(value)], [[value]])
    return 0


def _chain_text(chain) -> str:
    return ",".join(map(str, chain))


def _tiling_lines(solution: TilingSolution, universe: int, candidates: int) -> List[str]:
    lines = [
        f"tiling k={solution.root.s} r={solution.root.j} m={solution.height}",
        f"universe {universe}",
        f"candidates {candidates}",
        f"copies {len(solution.copies)}",
    ]
    for idx, c in enumerate(solution.copies):
        chosen = "; ".join(
            f"level {solution.root.s + s}: " + " ".join(map(str, subset))
            for s, subset in enumerate(c.chosen, start=1)
        )
        lines.append(f"copy {idx}: root {_coord_text(c.root)}; {chosen}")
    for chain in sorted(solution.assignment):
        lines.append(f"chain {_chain_text(chain)} -> copy {solution.assignment[chain]}")
    return lines


def _cmd_tiling(args, out: _Output) -> int:
    inputs = {"k": args.k, "r": args.r, "m": args.m}
    if args.count_all:
        # solve first: the guards live behind these calls
        covers = tiling.count_all_tilings(args.k, args.r, args.m, args.unsafe_limits)
        universe = _universe_size(args.k, args.m)
        candidates = tiling.copy_count(args.k, args.m)
        result = {"universe": universe, "candidates": candidates, "covers": covers}
        record = _record("tiling", {**inputs, "count_all": True}, result)
        out.emit(record, [f"covers {covers}"], [[covers]])
        return 0
    solution = tiling.find_tiling(args.k, args.r, args.m, args.unsafe_limits)
    universe = _universe_size(args.k, args.m)
    candidates = tiling.copy_count(args.k, args.m)
    if solution is None:
        result = {
            "universe": universe,
            "candidates": candidates,
            "copies": None,
            "verdict": "NO COVER",
        }
        record = _record("tiling", inputs, result)
        out.emit(
            record,
            [
                f"tiling k={args.k} r={args.r} m={args.m}",
                f"universe {universe}",
                f"candidates {candidates}",
                "NO COVER (exhaustive search)",
            ],
            [["NO COVER"]],
        )
        return 0
    valid = tiling.verify_tiling(solution)
    verdict = "VALID" if valid else "INVALID"
    result = {
        "universe": universe,
        "candidates": candidates,
        "copies": [
            {"root": [c.root.j, c.root.s], "chosen": [list(s) for s in c.chosen]}
            for c in solution.copies
        ],
        "assignment": {
            _chain_text(chain): idx for chain, idx in sorted(solution.assignment.items())
        },
        "verdict": verdict,
    }
    record = _record("tiling", inputs, result)
    lines = _tiling_lines(solution, universe, candidates) + [f"verdict {verdict}"]
    csv_rows = [
        [idx, _coord_text(c.root)] + [" ".join(map(str, s)) for s in c.chosen]
        for idx, c in enumerate(solution.copies)
    ]
    out.emit(record, lines, csv_rows)
    return 0 if valid else 1


def _cmd_gv(args, out: _Output) -> int:
    value = gvpaths.fibonomial_via_paths(args.n, args.k, args.unsafe_limits)
    record = _record("gv", {"n": args.n, "k": args.k}, value)
    out.emit(record, [str(value)], [[value]])
    return 0


def _parse_weights(args) -> weighted.WeightVector:
    if args.weights is not None:
        try:
            entries = [int(w) for w in args.weights.split(",") if w != ""]
        except ValueError as exc:
            raise ValueError(f"bad --weights value: {args.weights!r}") from exc
        return weighted.WeightVector(entries)
    parts = args.preset.split(":")
    kind = parts[0]
    try:
        n = int(parts[1])
        q = int(parts[2]) if len(parts) > 2 else None
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad --preset value: {args.preset!r}") from exc
    return weighted.preset_weights(kind, n, q)


def _cmd_konvalina(args, out: _Output) -> int:
    wv = _parse_weights(args)
    fn = weighted.c_coeff if args.kind == "first" else weighted.s_coeff
    value = fn(wv, args.k)
    inputs = {"kind": args.kind, "weights": list(wv.weights), "k": args.k}
    record = _record("konvalina", inputs, value)
    out.emit(record, [str(value)], [[value]])
    return 0


def _cmd_fence(args, out: _Output) -> int:
    value = fence.count_ideals(args.m)
    record = _record("fence", {"m": args.m}, value)
    out.emit(record, [str(value)], [[value]])
    return 0


def _hasse_dot(poset: cobweb.CobwebPoset) -> str:
    lines = ["digraph cobweb {", "  rankdir=BT;", '  node [shape=circle];']
    for x in range(1, poset.vertex_count + 1):
        v = poset.coord_of(x)
        lines.append(f'  v{x} [label="{v.j},{v.s} #{x}"];')
    for s in range(1, poset.max_level + 1):
        members = " ".join(f"v{x};" for x in poset.level_range(s))
        lines.append(f"  {{ rank=same; {members} }}")
    for x, y in poset.hasse_edges():
        lines.append(f"  v{x} -> v{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_hasse(args, out: _Output) -> int:
    ensure_within("hasse level", args.n, HASSE_LIMIT, args.unsafe_limits)
    poset = cobweb.build(args.n)
    edges = list(poset.hasse_edges())
    coords = [list(poset.coord_of(x)) for x in range(1, poset.vertex_count + 1)]
    record = _record(
        "hasse",
        {"n": args.n},
        {"vertices": coords, "edges": [list(e) for e in edges]},
    )
    text = [f"vertices {poset.vertex_count}"]
    text += [
        f"{x} {_coord_text(poset.coord_of(x))}" for x in range(1, poset.vertex_count + 1)
    ]
    text += [f"{x} -> {y}" for x, y in edges]
    out.emit(record, text, [[x, y] for x, y in edges], _hasse_dot(poset))
    return 0


def _cmd_verify(args, out: _Output) -> int:
    started = time.perf_counter()
    results = verify.run_suite(args.suite)
    elapsed = time.perf_counter() - started
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name}" + (f" ({r.detail})" if r.detail else "")
        for r in results
    ]
    all_passed = all(r.passed for r in results)
    lines.append(f"suite {args.suite}: {'PASS' if all_passed else 'FAIL'}")
    record = _record(
        "verify",
        {"suite": args.suite},
        {
            "checks": [
                {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
            ],
            "passed": all_passed,
        },
    )
    out.emit(record, lines, [[r.name, r.passed, r.detail] for r in results])
    print(f"suite {args.suite} wall time: {elapsed:.2f}s", file=sys.stderr)
    return 0 if all_passed else 1


_COMMANDS = {
    "fibonomial": _cmd_fibonomial,
    "zeta": _cmd_zeta,
    "mobius": _cmd_mobius,
    "chains": _cmd_chains,
    "tiling": _cmd_tiling,
    "gv": _cmd_gv,
    "konvalina": _cmd_konvalina,
    "fence": _cmd_fence,
    "hasse": _cmd_hasse,
    "verify": _cmd_verify,
}

_GRAPH_COMMANDS = {"hasse"}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.format == "dot" and args.command not in _GRAPH_COMMANDS:
        print("error: dot output is valid only for graph-producing commands", file=sys.stderr)
        return 2
    if args.unsafe_limits:
        print("warning: desk-scale guards overridden (--unsafe-limits)", file=sys.stderr)
    try:
        return _COMMANDS[args.command](args, _Output(args))
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        print("rerun with --unsafe-limits to override", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, AssertionError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
