"""Command line front end.

Exit status: 0 on success, 1 for malformed input or usage, 2 for domain
errors (e.g. a matrix that is not a metric, an out-of-range vertex), 3 when
a checked property fails (``hyperbolic`` on a non-tree metric).
"""

from __future__ import annotations

import argparse
import sys
from importlib import metadata

import numpy as np

from . import contour, excursion, formats, metric_index, pathforest
from .errors import RTreeError
from .newick import canonical_newick, format_number, to_newick

FORMATS_HELP = """\
input formats:
  tree.txt    first line "n root", then n-1 lines "parent child" ('#' comments)
  exc.txt     one line of whitespace-separated heights, e.g. "0 1 2 1 0 1 0"
  field.txt   "n m", then n lines "vertex value", then m lines "u v"
  paths.txt   one path per line, tokens separated by whitespace
  matrix.txt  "n", then n rows of n numbers

exit status:
  0 ok, 1 bad input or usage, 2 domain error, 3 property violated
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:
        return "unknown"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rtreekit",
        description="Tree coding, tree metrics and contour trees.",
        epilog=FORMATS_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {_version()}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text,
                           epilog=FORMATS_HELP,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("-i", "--input", default="-", help="input file (default: stdin)")
        return p

    add("encode", "edge-list tree -> excursion")
    p = add("decode", "excursion -> canonical Newick of the coded tree")
    p.add_argument("--labels", action="store_true",
                   help="label vertices by first-visit order instead of writing shape only")
    p = add("excdist", "excursion distance between two times")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p = add("dist", "tree distance between two vertices of an edge-list tree")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p = add("hyperbolic", "four-point test on a distance matrix")
    p.add_argument("--tol", type=float, default=0.0)
    p = add("contour-tree", "contour tree of a scalar field")
    p.add_argument("--format", choices=["newick", "dot", "matrix"], default="newick")
    p = add("lambda", "merge level of two vertices of a scalar field")
    p.add_argument("y", type=int)
    p.add_argument("z", type=int)
    p = add("path-tree", "trie of a path list")
    p.add_argument("--format", choices=["newick", "matrix"], default="newick")
    p = add("path-dist", "separation distance between paths on lines i and j (0-based)")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p = sub.add_parser("random-exc", help="uniform random excursion",
                       description="uniform random excursion with EDGES up steps")
    p.add_argument("edges", type=int)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _dispatch(args) -> tuple[int, str]:
    cmd = args.command
    if cmd == "random-exc":
        if args.edges < 1:
            raise RTreeError("EDGES must be positive")
        return 0, formats.write_excursion(excursion.random_excursion(args.edges, args.seed))
    text = _read(args.input)

    if cmd == "encode":
        return 0, formats.write_excursion(excursion.encode(formats.read_edge_list(text)))
    if cmd == "decode":
        tree = excursion.decode(formats.read_excursion(text))
        return 0, canonical_newick(tree, labels=args.labels) + "\n"
    if cmd == "excdist":
        exc = formats.read_excursion(text)
        return 0, f"{excursion.excursion_distance(exc, args.m, args.n)}\n"
    if cmd == "dist":
        index = metric_index.build_index(formats.read_edge_list(text))
        return 0, f"{metric_index.dist(index, args.a, args.b)}\n"
    if cmd == "hyperbolic":
        report = metric_index.four_point_check(formats.read_matrix(text), tol=args.tol)
        witness = "-" if report.witness is None else " ".join(map(str, report.witness))
        out = (f"zero_hyperbolic {'true' if report.is_zero_hyperbolic else 'false'}\n"
               f"worst_violation {format_number(report.worst_violation)}\n"
               f"witness {witness}\n")
        return (0 if report.is_zero_hyperbolic else 3), out
    if cmd in ("contour-tree", "lambda"):
        merge = contour.build_merge(formats.read_field(text))
        if cmd == "lambda":
            return 0, format_number(contour.merge_level(merge, args.y, args.z)) + "\n"
        if args.format == "matrix":
            n = merge.field.n
            D = [[contour.contour_distance(merge, x, y) for y in range(n)] for x in range(n)]
            return 0, formats.write_matrix(np.array(D))
        q = contour.quotient_tree(merge)
        if args.format == "dot":
            return 0, formats.quotient_dot(q)
        return 0, formats.quotient_newick(q) + "\n"
    if cmd in ("path-tree", "path-dist"):
        paths = formats.read_paths(text)
        forest = pathforest.PathForest()
        ids = [forest.insert_path(p) for p in paths]
        if cmd == "path-dist":
            for k in (args.i, args.j):
                if not 0 <= k < len(ids):
                    raise pathforest.BadPathId(f"no path on line {k}")
            return 0, f"{pathforest.path_distance(forest, ids[args.i], ids[args.j])}\n"
        if args.format == "matrix":
            D = [[pathforest.path_distance(forest, p, q) for q in ids] for p in ids]
            return 0, formats.write_matrix(np.array(D, dtype=np.int64).reshape(len(ids), len(ids)))
        tree, _ = pathforest.to_tree(forest)
        return 0, to_newick(tree) + "\n"
    raise AssertionError(cmd)


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Parse ``argv`` and return ``(exit status, stdout text)``.

    Errors are written to stderr.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        return _dispatch(args)
    except RTreeError as exc:
        print(f"rtreekit {args.command}: {exc}", file=sys.stderr)
        return exc.exit_code, ""
    except OSError as exc:
        print(f"rtreekit {args.command}: {exc}", file=sys.stderr)
        return 1, ""


def main(argv: list[str] | None = None) -> int:
    status, out = run(argv)
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
