"""Contour (merge) trees of scalar fields on finite graphs.

For a connected graph with vertex values ``h``, the super-level component
of ``x`` at level ``lam`` is the connected component containing ``x`` of the
subgraph induced by ``{y : h(y) >= lam}``. Sweeping levels from the top
down with a union-find gives all of these components at once. Every record
of the sweep is a set of vertices of equal value that are connected above
that value, and these records are exactly the vertices of the quotient tree
under ``d(x, y) = h(x) + h(y) - 2 lambda(x, y)``, where ``lambda(x, y)`` is
the highest level at which ``x`` and ``y`` share a component.
"""

from __future__ import annotations

import bisect
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from numbers import Real
from typing import Iterable, Sequence

from .errors import (
    BadVertex,
    DisconnectedGraph,
    DomainError,
    LevelAboveX,
    LevelNotRealized,
    RTreeError,
)
from .metric_index import TreeMetricIndex, build_index
from .tree import RootedTree


@dataclass(frozen=True, eq=False)
class ScalarField:
    """Nonnegative values on the vertices ``0..n-1`` of an undirected graph."""

    values: tuple
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.values) == 0:
            raise RTreeError("field needs at least one vertex")
        if len(self.adjacency) != len(self.values):
            raise RTreeError("adjacency size differs from value count")
        for x in self.values:
            if not isinstance(x, Real) or isinstance(x, bool):
                raise RTreeError(f"value {x!r} is not a real number")
            if isinstance(x, float) and not math.isfinite(x):
                raise RTreeError(f"value {x!r} is not finite")
            if x < 0:
                raise RTreeError(f"value {x!r} is negative")

    @classmethod
    def from_edges(cls, values: Sequence, edges: Iterable[tuple[int, int]]) -> ScalarField:
        n = len(values)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return cls(tuple(values), tuple(tuple(sorted(a)) for a in adj))

    @property
    def n(self) -> int:
        return len(self.values)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def minimum(self):
        return min(self.values)

    @property
    def minima(self) -> frozenset[int]:
        lo = self.minimum
        return frozenset(v for v, x in enumerate(self.values) if x == lo)

    def check_vertex(self, v) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise BadVertex(f"vertex {v!r} out of range 0..{self.n - 1}")


def component_at(field: ScalarField, x: int, lam) -> frozenset[int]:
    """Flood fill of ``x`` inside ``{y : h(y) >= lam}``."""
    field.check_vertex(x)
    h = field.values
    if lam > h[x]:
        raise LevelAboveX(f"level {lam} above h({x}) = {h[x]}")
    seen = {x}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for w in field.adjacency[v]:
            if w not in seen and h[w] >= lam:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)


@dataclass
class ComponentRecord:
    """One node of the merge dendrogram.

    ``members`` are the vertices with ``h == level`` in this component of
    ``{h >= level}``; ``children`` are the components above ``level`` that it
    absorbed. ``merge_level`` is the level at which it joins its parent.
    """

    id: int
    level: object
    members: tuple[int, ...]
    children: tuple[int, ...] = ()
    parent: int | None = None
    merge_level: object = None


@dataclass(eq=False)
class MergeStructure:
    field: ScalarField
    levels: tuple
    records: tuple[ComponentRecord, ...]
    class_of: tuple[int, ...]
    dendrogram: RootedTree

    @cached_property
    def _index(self) -> TreeMetricIndex:
        return build_index(self.dendrogram)

    def component_id(self, x: int, lam) -> int:
        """Dendrogram node whose subtree is the component of ``x`` at ``lam``."""
        self.field.check_vertex(x)
        if lam > self.field.values[x]:
            raise LevelAboveX(f"level {lam} above h({x})")
        node = self.class_of[x]
        rec = self.records
        while rec[node].parent is not None and rec[rec[node].parent].level >= lam:
            node = rec[node].parent
        return node

    def component_members(self, node: int) -> frozenset[int]:
        out = []
        stack = [node]
        while stack:
            r = self.records[stack.pop()]
            out.extend(r.members)
            stack.extend(r.children)
        return frozenset(out)

    def components(self, lam) -> list[frozenset[int]]:
        """Partition of ``{h >= lam}`` into components."""
        tops = [r.id for r in self.records
                if r.level >= lam and (r.parent is None or self.records[r.parent].level < lam)]
        return [self.component_members(t) for t in tops]


def build_merge(field: ScalarField) -> MergeStructure:
    """Descending union-find sweep over the distinct values of ``field``.

    Node ids of the result are renumbered in preorder from the root, with
    children ordered by their smallest member vertex.
    """
    h = field.values
    n = field.n
    by_level: dict = {}
    for v, x in enumerate(h):
        by_level.setdefault(x, []).append(v)
    levels = tuple(sorted(by_level, reverse=True))

    uf = list(range(n))
    size = [1] * n

    def find(v):
        while uf[v] != v:
            uf[v] = uf[uf[v]]
            v = uf[v]
        return v

    def union(a, b):
        a, b = find(a), find(b)
        if a == b:
            return
        if size[a] < size[b]:
            a, b = b, a
        uf[b] = a
        size[a] += size[b]

    active = [False] * n
    node_of_root: dict[int, int] = {}
    rep: list[int] = []
    node_level: list = []
    node_members: list[list[int]] = []
    node_children: list[list[int]] = []
    node_class = [-1] * n

    for lam in levels:
        new = by_level[lam]
        old_nodes = set()
        for v in new:
            for w in field.adjacency[v]:
                if active[w]:
                    old_nodes.add(node_of_root[find(w)])
        for v in new:
            active[v] = True
        for v in new:
            for w in field.adjacency[v]:
                if active[w]:
                    union(v, w)
        created: dict[int, int] = {}
        for v in new:  # ascending vertex id
            r = find(v)
            if r not in created:
                created[r] = len(node_level)
                rep.append(v)
                node_level.append(lam)
                node_members.append([])
                node_children.append([])
            node_members[created[r]].append(v)
            node_class[v] = created[r]
        for old in sorted(old_nodes):
            node_children[created[find(rep[old])]].append(old)
        for r, node in created.items():
            node_of_root[r] = node

    k = len(node_level)
    parent = [None] * k
    for p, kids in enumerate(node_children):
        for c in kids:
            parent[c] = p
    roots = [i for i in range(k) if parent[i] is None]
    if len(roots) != 1:
        raise DisconnectedGraph(f"graph has {len(roots)} connected components")

    # renumber: preorder from the root, children by smallest member
    low = [min(m) for m in node_members]
    order = []
    stack = [roots[0]]
    while stack:
        i = stack.pop()
        order.append(i)
        stack.extend(sorted(node_children[i], key=lambda c: low[c], reverse=True))
    new_id = {old: i for i, old in enumerate(order)}
    records = []
    for old in order:
        p = parent[old]
        records.append(ComponentRecord(
            id=new_id[old],
            level=node_level[old],
            members=tuple(node_members[old]),
            children=tuple(new_id[c] for c in sorted(node_children[old], key=lambda c: low[c])),
            parent=None if p is None else new_id[p],
            merge_level=None if p is None else node_level[p],
        ))
    tree = RootedTree(
        0,
        tuple(0 if r.parent is None else r.parent for r in records),
        tuple(r.children for r in records),
        tuple("+".join(map(str, r.members)) for r in records),
    )
    return MergeStructure(field, levels, tuple(records),
                          tuple(new_id[c] for c in node_class), tree)


def merge_level(merge: MergeStructure, y: int, z: int):
    """Highest level at which ``y`` and ``z`` share a super-level component."""
    merge.field.check_vertex(y)
    merge.field.check_vertex(z)
    node = int(merge._index.lca_many(merge.class_of[y], merge.class_of[z]))
    return merge.records[node].level


# name used by the rest of the package; ``lambda`` itself is reserved
lambda_ = merge_level


def contour_distance(merge: MergeStructure, x: int, y: int):
    h = merge.field.values
    return h[x] + h[y] - 2 * merge_level(merge, x, y)


@dataclass(frozen=True, eq=False)
class QuotientTree:
    """The contour tree: classes of vertices at contour distance zero.

    ``edge_length[c]`` is the length of the edge from ``c`` to its parent.
    """

    tree: RootedTree
    class_of: tuple[int, ...]
    height_of: tuple
    edge_length: dict

    @cached_property
    def _index(self) -> TreeMetricIndex:
        return build_index(self.tree)

    def path_length(self, a: int, b: int):
        """Weighted tree distance between classes ``a`` and ``b``."""
        c = int(self._index.lca_many(a, b))
        return self.height_of[a] + self.height_of[b] - 2 * self.height_of[c]


def quotient_tree(merge: MergeStructure) -> QuotientTree:
    records = merge.records
    heights = tuple(r.level for r in records)
    lengths = {r.id: r.level - records[r.parent].level
               for r in records if r.parent is not None}
    return QuotientTree(merge.dendrogram, merge.class_of, heights, lengths)


def level_representative(merge: MergeStructure, x: int, lam) -> int:
    """Quotient class on the root path of ``x`` sitting exactly at ``lam``."""
    merge.field.check_vertex(x)
    h = merge.field.values
    if lam > h[x] or lam < merge.field.minimum:
        raise DomainError(f"level {lam} outside [{merge.field.minimum}, {h[x]}]")
    path = merge.dendrogram.ancestors(merge.class_of[x])
    path_levels = [merge.records[c].level for c in path]  # descending
    for c, lv in zip(path, path_levels):
        if lv == lam:
            return c
    ascending = path_levels[::-1]
    i = bisect.bisect_left(ascending, lam)
    raise LevelNotRealized(lam, ascending[i - 1], ascending[i])
