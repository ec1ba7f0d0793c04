"""Rooted trees on dense integer vertex ids.

A :class:`RootedTree` stores parent links and ordered child lists for the
vertices ``0..n-1``. Child order matters: it is the "first child first" order
used by the excursion codec and by the Euler tour of the metric index.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from .errors import (
    BadRoot,
    BadVertex,
    CycleDetected,
    Disconnected,
    DownSetNotChain,
    NoLeastElement,
    RTreeError,
)


class Relation(enum.Enum):
    ANCESTOR = "ancestor"
    DESCENDANT = "descendant"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, eq=True)
class RootedTree:
    """Immutable rooted tree.

    Attributes
    ----------
    root : int
        Root vertex id.
    parent : tuple[int, ...]
        ``parent[v]`` is the parent of ``v``; the root maps to itself.
    children : tuple[tuple[int, ...], ...]
        Ordered child lists.
    labels : tuple[str, ...] or None
        Optional per-vertex labels.
    """

    root: int
    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=True)

    def __post_init__(self):
        n = len(self.parent)
        if n == 0:
            raise RTreeError("a tree needs at least one vertex")
        if len(self.children) != n:
            raise RTreeError("parent and children sizes differ")
        if not 0 <= self.root < n:
            raise BadRoot(f"root {self.root} out of range 0..{n - 1}")
        if self.parent[self.root] != self.root:
            raise BadRoot("root must be its own parent")
        if self.labels is not None and len(self.labels) != n:
            raise RTreeError("labels size differs from vertex count")
        seen = [False] * n
        for p, kids in enumerate(self.children):
            for c in kids:
                if not 0 <= c < n or seen[c] or c == self.root:
                    raise RTreeError(f"bad child {c} under {p}")
                if self.parent[c] != p:
                    raise RTreeError(f"parent[{c}] != {p}")
                seen[c] = True
        # every non-root vertex must hang off its parent and reach the root
        if sum(seen) != n - 1:
            raise Disconnected("children lists do not cover all non-root vertices")
        if len(self.preorder) != n:
            raise CycleDetected("parent links contain a cycle")

    @property
    def vertex_count(self) -> int:
        return len(self.parent)

    @property
    def edge_count(self) -> int:
        return len(self.parent) - 1

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]

    def edges(self) -> list[tuple[int, int]]:
        """(parent, child) pairs in preorder."""
        return [(self.parent[v], v) for v in self.preorder if v != self.root]

    @cached_property
    def preorder(self) -> tuple[int, ...]:
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
            if len(order) > len(self.parent):
                break
        return tuple(order)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        d = [0] * self.vertex_count
        for v in self.preorder:
            if v != self.root:
                d[v] = d[self.parent[v]] + 1
        return tuple(d)

    @cached_property
    def _intervals(self) -> tuple[list[int], list[int]]:
        # entry index in preorder and size of subtree
        n = self.vertex_count
        tin = [0] * n
        size = [1] * n
        for i, v in enumerate(self.preorder):
            tin[v] = i
        for v in reversed(self.preorder):
            if v != self.root:
                size[self.parent[v]] += size[v]
        return tin, size

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise BadVertex(f"vertex {v!r} out of range 0..{self.vertex_count - 1}")

    def is_ancestor(self, a: int, b: int) -> bool:
        """True when ``a`` lies on the root-to-``b`` path (``a == b`` included)."""
        tin, size = self._intervals
        return tin[a] <= tin[b] < tin[a] + size[a]

    def ancestors(self, v: int) -> list[int]:
        """Path from ``v`` up to the root, ``v`` first."""
        out = [v]
        while v != self.root:
            v = self.parent[v]
            out.append(v)
        return out

    def relabeled(self, labels: Sequence[str] | None) -> RootedTree:
        return RootedTree(self.root, self.parent, self.children,
                          None if labels is None else tuple(labels))


def _from_parent_map(parent: list[int], root: int, children: list[list[int]],
                     labels=None) -> RootedTree:
    return RootedTree(root, tuple(parent), tuple(tuple(c) for c in children),
                      None if labels is None else tuple(labels))


def build_tree(
    edges: Iterable[tuple[int, int]],
    root: int = 0,
    n: int | None = None,
    child_order: str | Callable[[int], object] = "ascending",
    labels: Sequence[str] | None = None,
) -> RootedTree:
    """Orient an undirected edge list away from ``root``.

    ``child_order`` is ``"ascending"`` (by vertex id), ``"input"`` (order of
    appearance in ``edges``) or a key function on vertex ids.
    ``n`` defaults to one more than the largest id seen (or 1 for no edges).
    """
    edges = [(int(a), int(b)) for a, b in edges]
    if n is None:
        n = 1 + max((max(e) for e in edges), default=0)
    if not 0 <= root < n:
        raise BadRoot(f"root {root} out of range 0..{n - 1}")
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise BadVertex(f"edge ({a}, {b}) has an id outside 0..{n - 1}")
        if a == b:
            raise CycleDetected(f"self loop at {a}")
        adj[a].append(b)
        adj[b].append(a)
    if len(edges) >= n:
        raise CycleDetected(f"{len(edges)} edges on {n} vertices")

    parent = [-1] * n
    parent[root] = root
    children: list[list[int]] = [[] for _ in range(n)]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w == parent[v] and v != root:
                continue
            if parent[w] != -1:
                raise CycleDetected(f"cycle through edge ({v}, {w})")
            parent[w] = v
            children[v].append(w)
            queue.append(w)
    missing = [v for v in range(n) if parent[v] == -1]
    if missing:
        raise Disconnected(f"vertices unreachable from root: {missing[:10]}")

    if child_order == "ascending":
        for c in children:
            c.sort()
    elif callable(child_order):
        for c in children:
            c.sort(key=child_order)
    elif child_order != "input":
        raise ValueError(f"unknown child_order {child_order!r}")
    return _from_parent_map(parent, root, children, labels)


def compare(tree: RootedTree, a: int, b: int) -> Relation:
    tree.check_vertex(a)
    tree.check_vertex(b)
    if a == b:
        return Relation.EQUAL
    if tree.is_ancestor(a, b):
        return Relation.ANCESTOR
    if tree.is_ancestor(b, a):
        return Relation.DESCENDANT
    return Relation.INCOMPARABLE


def from_partial_order(
    elements: Iterable[Hashable], leq: Callable[[Hashable, Hashable], bool]
) -> RootedTree:
    """Build the rooted tree whose ancestor order is ``leq``.

    Vertex ``i`` is the ``i``-th element; labels are ``str(element)``. The
    parent of ``b`` is the largest element strictly below it.
    """
    elems = list(elements)
    n = len(elems)
    if n == 0:
        raise NoLeastElement("empty element set")
    below = [[i for i in range(n) if i != j and leq(elems[i], elems[j])] for j in range(n)]
    least = [j for j in range(n) if not below[j]]
    if len(least) != 1 or any(not leq(elems[least[0]], e) for e in elems):
        raise NoLeastElement("no unique least element")
    root = least[0]

    parent = [root] * n
    for j in range(n):
        down = below[j]
        for x in range(len(down)):
            for y in range(x + 1, len(down)):
                a, b = elems[down[x]], elems[down[y]]
                if not (leq(a, b) or leq(b, a)):
                    raise DownSetNotChain(a, b, elems[j])
        if down:
            # in a chain the maximum has the largest strict down-set
            parent[j] = max(down, key=lambda i: len(below[i]))
    children: list[list[int]] = [[] for _ in range(n)]
    for j in range(n):
        if j != root:
            children[parent[j]].append(j)
    return _from_parent_map(parent, root, children, [str(e) for e in elems])
