"""Newick serialization.

:func:`canonical_newick` sorts children so that trees equal up to child
reordering serialize identically. :func:`to_newick` keeps the stored child
order and can attach branch lengths and ``[&key=value]`` comments.
:func:`parse_newick` reads back either form.
"""

from __future__ import annotations

import re
from typing import Callable, Mapping

from .errors import InputError
from .tree import RootedTree, build_tree

_NEEDS_QUOTE = re.compile(r"[\s(),:;\[\]']")


def quote_label(label: str) -> str:
    if label and not _NEEDS_QUOTE.search(label):
        return label
    if not label:
        return ""
    return "'" + label.replace("'", "''") + "'"


def canonical_newick(tree: RootedTree, labels: bool = True) -> str:
    """Deterministic Newick string, invariant under child reordering.

    Children are sorted by their serialized subtree string; ties (identical
    strings) are broken by the smallest label in the subtree. With
    ``labels=False`` only the shape is written.
    """
    text: dict[int, str] = {}
    min_label: dict[int, str] = {}
    for v in reversed(tree.preorder):
        own = quote_label(tree.label(v)) if labels else ""
        kids = tree.children[v]
        ml = tree.label(v)
        for c in kids:
            ml = min(ml, min_label[c])
        min_label[v] = ml
        if kids:
            ordered = sorted(kids, key=lambda c: (text[c], min_label[c]))
            text[v] = "(" + ",".join(text[c] for c in ordered) + ")" + own
        else:
            text[v] = own
        for c in kids:
            del text[c]
    return text[tree.root] + ";"


def format_number(x) -> str:
    """Integral values without a fractional part, floats via ``repr``."""
    if isinstance(x, int):
        return str(x)
    f = float(x)
    if f.is_integer():
        return str(int(f))
    return repr(f)


def to_newick(
    tree: RootedTree,
    lengths: Mapping[int, object] | None = None,
    attrs: Callable[[int], Mapping[str, object]] | None = None,
) -> str:
    """Newick in stored child order.

    ``lengths[v]`` is the branch length above ``v``; ``attrs(v)`` gives
    key/value pairs written as an ``[&k=v,...]`` comment after the label.
    """
    out: dict[int, str] = {}
    for v in reversed(tree.preorder):
        s = ""
        if tree.children[v]:
            s = "(" + ",".join(out.pop(c) for c in tree.children[v]) + ")"
        s += quote_label(tree.label(v))
        if attrs is not None:
            pairs = attrs(v)
            if pairs:
                s += "[&" + ",".join(f"{k}={_attr(val)}" for k, val in pairs.items()) + "]"
        if lengths is not None and v != tree.root:
            s += ":" + format_number(lengths[v])
        out[v] = s
    return out[tree.root] + ";"


def _attr(val) -> str:
    if isinstance(val, (int, float)):
        return format_number(val)
    return str(val)


_TOKEN = re.compile(r"\s*(?:'((?:[^']|'')*)'|([^\s(),:;\[\]']+)|(\[[^\]]*\])|([(),:;]))")


def parse_newick(text: str, child_order: str = "input"):
    """Parse a Newick string.

    Returns ``(tree, lengths, comments)`` where vertex ids follow preorder,
    ``lengths`` maps vertex to branch length (float) when present and
    ``comments`` maps vertex to the raw bracket comment body.
    """
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise InputError(f"bad Newick near offset {pos}")
        pos = m.end()
        if m.group(1) is not None:
            tokens.append(("label", m.group(1).replace("''", "'")))
        elif m.group(2) is not None:
            tokens.append(("label", m.group(2)))
        elif m.group(3) is not None:
            tokens.append(("comment", m.group(3)[1:-1]))
        elif m.group(4) is not None:
            tokens.append((m.group(4), None))
        else:
            break
    if not tokens or tokens[-1][0] != ";":
        raise InputError("Newick must end with ';'")
    tokens.pop()

    labels: list[str] = [""]
    edges: list[tuple[int, int]] = []
    lengths: dict[int, float] = {}
    comments: dict[int, str] = {}
    # open internal vertices; the vertex being read is ``current``
    stack: list[int] = []
    current = 0
    i = 0

    def child_of(p: int) -> int:
        v = len(labels)
        labels.append("")
        edges.append((p, v))
        return v

    while i < len(tokens):
        kind, value = tokens[i]
        i += 1
        if kind == "(":
            if i > 1 and tokens[i - 2][0] not in "(,":
                raise InputError("'(' must open a subtree")
            stack.append(current)
            current = child_of(current)
        elif kind == ",":
            if not stack:
                raise InputError("',' outside parentheses")
            current = child_of(stack[-1])
        elif kind == ")":
            if not stack:
                raise InputError("unbalanced parentheses")
            current = stack.pop()
        elif kind == "label":
            labels[current] = value
        elif kind == "comment":
            comments[current] = value
        elif kind == ":":
            if i >= len(tokens) or tokens[i][0] != "label":
                raise InputError("missing branch length")
            try:
                lengths[current] = float(tokens[i][1])
            except ValueError:
                raise InputError(f"bad branch length {tokens[i][1]!r}") from None
            i += 1
        else:
            raise InputError(f"unexpected {kind!r}")
    if stack or current != 0:
        raise InputError("unbalanced parentheses")
    tree = build_tree(edges, root=0, n=len(labels), child_order=child_order, labels=labels)
    return tree, lengths, comments
