"""Command-line driver.

Exit codes: 0 success / property holds, 1 size-cap violation, 2 usage or
parse error, 3 property does not hold.  Data goes to stdout, diagnostics
to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import TextIO

from .canonical import canonical_form, is_canonical, is_semi_canonical
from .enumeration import (
    CANONICAL_ORDER_CAP,
    DEFAULT_ORDER_CAP,
    CountTable,
    count_canonical,
    count_semi_canonical,
    enumerate_canonical,
    enumerate_semi_canonical,
)
from .graph import count_graph_classes, parse_edge_list, why_not_isomorphic
from .matrix import (
    BinaryMatrix,
    CapExceededError,
    FormatError,
    col_code,
    format_matrix,
    parse_matrix,
    row_code,
)
from .sperm import (
    compose_sudoku,
    find_disjoint_families,
    first_s_permutation_violation,
    format_sudoku,
    parse_family,
)


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("BINCANON_JOBS", "1")))
    except ValueError:
        return 1


def _read_file(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit_counts(table: CountTable, fmt: str, out: TextIO):
    if fmt == "text":
        for i, c in enumerate(table.counts):
            out.write(f"k({table.n},{i}) = {c}\n")
    elif fmt == "csv":
        out.write("n,i,count\n")
        for i, c in enumerate(table.counts):
            out.write(f"{table.n},{i},{c}\n")
    else:
        json.dump({"n": table.n, "counts": list(table.counts)}, out)
        out.write("\n")


def cmd_enumerate(args) -> int:
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        if args.list:
            if args.kind == "semi":
                stream = enumerate_semi_canonical(args.n, cap=args.cap)
            else:
                stream = enumerate_canonical(args.n)
            for a in stream:
                out.write(format_matrix(a, "compact") + "\n")
        else:
            if args.kind == "semi":
                table = count_semi_canonical(args.n, cap=args.cap, jobs=args.jobs)
            else:
                table = count_canonical(args.n, jobs=args.jobs)
            _emit_counts(table, args.format, out)
    finally:
        if out is not sys.stdout:
            out.close()
    return 0


def _semi_violation(a: BinaryMatrix) -> str:
    xs = row_code(a).values
    for i in range(a.n - 1):
        if xs[i] > xs[i + 1]:
            return f"row codes decrease at rows {i + 1},{i + 2}: {xs[i]} > {xs[i + 1]}"
    ys = col_code(a).values
    for j in range(a.m - 1):
        if ys[j] > ys[j + 1]:
            return f"column codes decrease at columns {j + 1},{j + 2}: {ys[j]} > {ys[j + 1]}"
    raise AssertionError("no violation found")


def cmd_check(args) -> int:
    a = parse_matrix(_read_file(args.file))
    if args.property == "semi":
        if is_semi_canonical(a):
            print("semi-canonical: yes")
            return 0
        print(f"semi-canonical: no ({_semi_violation(a)})")
        return 3
    if args.property == "canonical":
        if is_canonical(a):
            print("canonical: yes")
            return 0
        smaller = canonical_form(a)
        print(f"canonical: no (equivalent matrix with smaller row codes: {list(smaller.rows)})")
        return 3
    # sperm
    if args.base is None:
        print("--base is required with --property sperm", file=sys.stderr)
        return 2
    try:
        reason = first_s_permutation_violation(a, args.base)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if reason is None:
        print("S-permutation: yes")
        return 0
    print(f"S-permutation: no ({reason})")
    return 3


def cmd_canonicalize(args) -> int:
    a = parse_matrix(_read_file(args.file))
    print(format_matrix(canonical_form(a), args.format))
    return 0


def cmd_graph_classes(args) -> int:
    print(count_graph_classes(args.n, args.k))
    return 0


def cmd_graph_iso(args) -> int:
    g = parse_edge_list(_read_file(args.file_a))
    h = parse_edge_list(_read_file(args.file_b))
    reason = why_not_isomorphic(g, h)
    if reason is None:
        print("yes")
        return 0
    print("no")
    print(reason, file=sys.stderr)
    return 3


def cmd_sudoku_families(args) -> int:
    for family in find_disjoint_families(args.base, allow_slow=args.allow_slow):
        print(" ".join(format_matrix(p.matrix, "compact") for p in family), flush=True)
    return 0


def cmd_sudoku_compose(args) -> int:
    parts = parse_family(_read_file(args.file))
    try:
        grid = compose_sudoku(parts)
    except ValueError as exc:
        print(f"invalid family: {exc}", file=sys.stderr)
        return 3
    print(format_sudoku(grid))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bincanon",
        description="Semi-canonical and canonical binary matrices: enumeration, "
        "canonicalization, bipartite-graph isomorphism, Sudoku composition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="enumerate or count square semi-canonical/canonical matrices")
    p.add_argument("--n", type=int, required=True, help="matrix order")
    p.add_argument("--kind", choices=["semi", "canonical"], default="semi")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--counts", action="store_true", help="emit the count table (default)")
    mode.add_argument("--list", action="store_true", help="stream matrices in compact format")
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.add_argument("--jobs", type=int, default=_default_jobs(),
                   help="parallel workers for counts mode (env BINCANON_JOBS)")
    p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP,
                   help=f"raise the order cap (default {DEFAULT_ORDER_CAP})")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="test a matrix file for a property")
    p.add_argument("file")
    p.add_argument("--property", choices=["semi", "canonical", "sperm"], required=True)
    p.add_argument("--base", type=int, help="block order (required for sperm)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("canonicalize", help="print the canonical form of a matrix file")
    p.add_argument("file")
    p.add_argument("--format", choices=["grid", "compact"], default="grid")
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("graph", help="bipartite-graph operations")
    gsub = p.add_subparsers(dest="graph_command", required=True)
    q = gsub.add_parser("classes", help="count graphs with n+n vertices, k edges up to isomorphism")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=cmd_graph_classes)
    q = gsub.add_parser("iso", help="test two edge-list files for isomorphism")
    q.add_argument("file_a")
    q.add_argument("file_b")
    q.set_defaults(func=cmd_graph_iso)

    p = sub.add_parser("sudoku", help="S-permutation families and Sudoku grids")
    ssub = p.add_subparsers(dest="sudoku_command", required=True)
    q = ssub.add_parser("families", help="stream mutually disjoint families, one per line")
    q.add_argument("--base", type=int, required=True)
    q.add_argument("--allow-slow", action="store_true",
                   help="opt into the practically endless base-3 stream")
    q.set_defaults(func=cmd_sudoku_families)
    q = ssub.add_parser("compose", help="compose a family file into a Sudoku grid")
    q.add_argument("file")
    q.set_defaults(func=cmd_sudoku_compose)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
