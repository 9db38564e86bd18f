"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import oracle
from .bench import benchmark, spread
from .export import FORMATS, dump
from .infinite import build_l_leq, inf_join, inf_meet, parse_inf
from .lattice import build, join, meet
from .partition_core import parse_partition, render_ferrers
from .suites import run_all
from .tree import CountTable, count_length_exact, level, partition_count, tree_dot, tree_edges

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
VERIFY_LIMIT = 15


class UsageError(Exception):
    pass


def _emit(text: str, path=None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _nonneg(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return n


def cmd_build(args) -> int:
    _emit(dump(build(args.n, args.method), args.format), args.output)
    return EXIT_OK


def cmd_count(args) -> int:
    table = CountTable()
    if args.length is None:
        value = partition_count(args.n, table)
        check = oracle.partition_count_dp(args.n) if args.check else None
    else:
        try:
            value = count_length_exact(args.n, args.length, table)
        except ValueError as exc:
            raise UsageError(str(exc))
        check = (
            sum(1 for p in oracle.enumerate_partitions(args.n) if len(p) == args.length)
            if args.check
            else None
        )
    if args.table:
        _emit(table.to_csv(), args.output)
        return EXIT_OK
    if check is None:
        _emit(f"{value}\n", args.output)
        return EXIT_OK
    status = "OK" if value == check else "MISMATCH"
    _emit(f"{value} {check} {status}\n", args.output)
    return EXIT_OK if value == check else EXIT_FAIL


def _lattice_op(args, finite, infinite) -> int:
    a, b = args.a.strip(), args.b.strip()
    try:
        if a.startswith("inf:") or b.startswith("inf:"):
            result = infinite(parse_inf(a), parse_inf(b))
        else:
            result = finite(parse_partition(a), parse_partition(b))
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(f"{result}\n", args.output)
    return EXIT_OK


def cmd_meet(args) -> int:
    return _lattice_op(args, meet, inf_meet)


def cmd_join(args) -> int:
    return _lattice_op(args, join, inf_join)


def cmd_tree(args) -> int:
    if args.format == "dot":
        text = tree_dot(args.depth)
    elif args.format == "edges":
        lines = [f"depth<={args.depth}"] + [f"{s}\t{lab}\t{c}" for s, lab, c in tree_edges(args.depth)]
        text = "\n".join(lines) + "\n"
    elif args.format == "text":
        text = "".join(
            f"{d}: {' '.join(map(str, sorted(level(d))))}\n" for d in range(args.depth + 1)
        )
    else:
        raise UsageError(f"tree does not support format {args.format!r}")
    _emit(text, args.output)
    return EXIT_OK


def cmd_linf(args) -> int:
    _emit(dump(build_l_leq(args.bound), args.format), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n > VERIFY_LIMIT and not args.force:
        sys.stderr.write(
            f"refusing to verify n={args.n} > {VERIFY_LIMIT}: the brute-force oracle is cubic; pass --force\n"
        )
        return EXIT_USAGE
    failed = 0
    lines = []
    for check in run_all(args.n):
        failed += not check.passed
        lines.append(str(check))
        if args.output is None:
            print(check, flush=True)
    lines.append(f"{'ALL PASS' if not failed else f'{failed} FAILED'}")
    if args.output is None:
        print(lines[-1])
    else:
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_bench(args) -> int:
    try:
        rows = benchmark(args.start, args.stop)
    except ValueError as exc:
        raise UsageError(str(exc))
    out = [f"{'n':>4} {'nodes':>9} {'edges':>9} {'seconds':>10} {'us/item':>9}"]
    for r in rows:
        out.append(f"{r.n:>4} {r.added_nodes:>9} {r.added_edges:>9} {r.seconds:>10.4f} {r.per_item * 1e6:>9.3f}")
    out.append(f"max/min time per added item: {spread(rows):.3f}")
    _emit("\n".join(out) + "\n", args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    try:
        s = parse_partition(args.partition)
    except ValueError as exc:
        raise UsageError(str(exc))
    text = render_ferrers(s)
    _emit(text + "\n" if text else "", args.output)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brylawski",
        description="Integer partition lattices under dominance order, built from grain moves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        p.add_argument("-o", "--output", help="write to this file instead of stdout")
        return p

    p = add("build", cmd_build, "emit the diagram of L_B(n)")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--method", choices=("naive", "incremental"), default="incremental")
    p.add_argument("--format", choices=FORMATS, default="edges")

    p = add("count", cmd_count, "number of partitions of n, c(n,n), or with --length k, c(n-k,k)")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--length", type=_nonneg)
    p.add_argument("--check", action="store_true", help="compare with the brute-force oracle")
    p.add_argument("--table", action="store_true", help="dump the c(l,k) table as CSV")

    for name, func in (("meet", cmd_meet), ("join", cmd_join)):
        p = add(name, func, f"{name} of two partitions of equal weight (or two inf: elements)")
        p.add_argument("a")
        p.add_argument("b")

    p = add("tree", cmd_tree, "the tree of partitions down to a depth")
    p.add_argument("--depth", type=_nonneg, required=True)
    p.add_argument("--format", choices=("dot", "edges", "text"), default="edges")

    p = add("linf", cmd_linf, "the diagram of L_B(<=bound)")
    p.add_argument("bound", type=_nonneg)
    p.add_argument("--format", choices=FORMATS, default="edges")

    p = add("verify", cmd_verify, "run every invariant suite up to weight n")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--force", action="store_true", help=f"allow n > {VERIFY_LIMIT}")

    p = add("bench", cmd_bench, "time the incremental step for n in [start, stop)")
    p.add_argument("start", type=_nonneg)
    p.add_argument("stop", type=_nonneg)

    p = add("render", cmd_render, "ASCII Ferrers diagram")
    p.add_argument("partition")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"brylawski {args.command}: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"brylawski {args.command}: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
