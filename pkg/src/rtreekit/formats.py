"""Text formats.

edge list
    ``n root`` then one ``parent child`` line per edge.
excursion
    whitespace-separated heights on one line.
scalar field
    ``n m``, then ``n`` lines ``vertex value``, then ``m`` lines ``u v``.
path list
    one path per line, tokens separated by whitespace.
matrix
    ``n`` then ``n`` rows of ``n`` numbers.

Lines starting with ``#`` and blank lines are skipped in all formats except
the path list, where every line (blank included) is a path.
"""

from __future__ import annotations

import re
from typing import Sequence

import numpy as np

from .contour import QuotientTree, ScalarField
from .errors import InputError
from .excursion import Excursion, validate_excursion
from .newick import format_number, to_newick
from .tree import RootedTree, build_tree

_INT = re.compile(r"[+-]?\d+\Z")
_DEC = re.compile(r"[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?\Z")


def _lines(text: str) -> list[list[str]]:
    out = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def parse_int(tok: str) -> int:
    if not _INT.match(tok):
        raise InputError(f"expected an integer, got {tok!r}")
    return int(tok)


def parse_number(tok: str):
    """Decimal integer as ``int``, anything with a dot or exponent as ``float``."""
    if _INT.match(tok):
        return int(tok)
    if _DEC.match(tok):
        return float(tok)
    raise InputError(f"expected a number, got {tok!r}")


def read_edge_list(text: str, child_order: str = "ascending") -> RootedTree:
    rows = _lines(text)
    if not rows or len(rows[0]) != 2:
        raise InputError("edge list must start with 'n root'")
    n, root = (parse_int(t) for t in rows[0])
    if n < 1:
        raise InputError("vertex count must be positive")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise InputError(f"expected 'parent child', got {' '.join(row)!r}")
        edges.append(tuple(parse_int(t) for t in row))
    if len(edges) != n - 1:
        raise InputError(f"expected {n - 1} edges, got {len(edges)}")
    tree = build_tree(edges, root=root, n=n, child_order=child_order)
    for p, c in edges:
        if tree.parent[c] != p:
            raise InputError(f"edge ({p}, {c}) points toward the root")
    return tree


def write_edge_list(tree: RootedTree) -> str:
    lines = [f"{tree.vertex_count} {tree.root}"]
    lines += [f"{p} {c}" for p, c in tree.edges()]
    return "\n".join(lines) + "\n"


def read_excursion(text: str) -> Excursion:
    toks = [t for row in _lines(text) for t in row]
    if not toks:
        raise InputError("empty excursion")
    return validate_excursion([parse_int(t) for t in toks])


def write_excursion(exc: Excursion) -> str:
    return str(exc) + "\n"


def read_field(text: str) -> ScalarField:
    rows = _lines(text)
    if not rows or len(rows[0]) != 2:
        raise InputError("field must start with 'n m'")
    n, m = (parse_int(t) for t in rows[0])
    if len(rows) != 1 + n + m:
        raise InputError(f"expected {n} value lines and {m} edge lines")
    values: list = [None] * n
    for row in rows[1:1 + n]:
        if len(row) != 2:
            raise InputError(f"expected 'vertex value', got {' '.join(row)!r}")
        v = parse_int(row[0])
        if not 0 <= v < n or values[v] is not None:
            raise InputError(f"vertex id {v} repeated or outside 0..{n - 1}")
        values[v] = parse_number(row[1])
    edges = []
    for row in rows[1 + n:]:
        if len(row) != 2:
            raise InputError(f"expected 'u v', got {' '.join(row)!r}")
        edges.append((parse_int(row[0]), parse_int(row[1])))
    return ScalarField.from_edges(values, edges)


def write_field(field: ScalarField) -> str:
    edges = field.edges()
    lines = [f"{field.n} {len(edges)}"]
    lines += [f"{v} {format_number(x)}" for v, x in enumerate(field.values)]
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_paths(text: str) -> list[list[str]]:
    return [line.split() for line in text.splitlines()]


def write_paths(paths: Sequence[Sequence[str]]) -> str:
    return "".join(" ".join(p) + "\n" for p in paths)


def read_matrix(text: str) -> np.ndarray:
    rows = _lines(text)
    if not rows or len(rows[0]) != 1:
        raise InputError("matrix must start with its size")
    n = parse_int(rows[0][0])
    if len(rows) != n + 1 or any(len(r) != n for r in rows[1:]):
        raise InputError(f"expected {n} rows of {n} numbers")
    vals = [[parse_number(t) for t in r] for r in rows[1:]]
    if all(isinstance(x, int) for r in vals for x in r):
        return np.array(vals, dtype=np.int64).reshape(n, n)
    return np.array(vals, dtype=np.float64).reshape(n, n)


def write_matrix(matrix) -> str:
    D = np.asarray(matrix)
    lines = [str(D.shape[0])]
    lines += [" ".join(format_number(x.item()) for x in row) for row in D]
    return "\n".join(lines) + "\n"


def quotient_newick(q: QuotientTree) -> str:
    """Contour tree as Newick: branch lengths are level differences and each
    class carries its height as a ``[&height=...]`` comment."""
    return to_newick(q.tree, q.edge_length, lambda v: {"height": q.height_of[v]})


def quotient_dot(q: QuotientTree) -> str:
    t = q.tree
    lines = ["digraph contour {"]
    for v in range(t.vertex_count):
        lines.append(
            f'  {v} [label="{t.label(v)}", height={format_number(q.height_of[v])}];'
        )
    for p, c in sorted(t.edges()):
        lines.append(f"  {p} -> {c} [length={format_number(q.edge_length[c])}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
