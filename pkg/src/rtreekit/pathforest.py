"""Paths from a common origin under the separation metric.

Paths are token sequences. Two paths agree up to their longest common
prefix and are then apart forever, so
``d(p, q) = len(p) + len(q) - 2 * lcp(p, q)``. Storing the paths in a trie
makes the metric a tree metric: the trie vertex of a path sits at depth
``len(p)`` and the LCA of two path vertices sits at depth ``lcp(p, q)``.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from .errors import BadPathId
from .tree import RootedTree


class PathForest:
    """Prefix-closed family of token paths stored as a trie.

    Path ids are trie vertex ids; vertex 0 is the origin (the empty path).
    Every prefix of an inserted path is itself a valid path id.
    """

    def __init__(self, paths: Iterable[Sequence[Hashable]] = ()):
        self._next: list[dict[Hashable, int]] = [{}]
        self._parent: list[int] = [0]
        self._token: list[Hashable | None] = [None]
        self._tokens: list[tuple] = [()]
        for p in paths:
            self.insert_path(p)

    def __len__(self) -> int:
        return len(self._parent)

    @property
    def origin(self) -> int:
        return 0

    def insert_path(self, tokens: Sequence[Hashable]) -> int:
        node = 0
        for t in tokens:
            nxt = self._next[node].get(t)
            if nxt is None:
                nxt = len(self._parent)
                self._next[node][t] = nxt
                self._next.append({})
                self._parent.append(node)
                self._token.append(t)
                self._tokens.append(self._tokens[node] + (t,))
            node = nxt
        return node

    def find(self, tokens: Sequence[Hashable]) -> int | None:
        node = 0
        for t in tokens:
            node = self._next[node].get(t)
            if node is None:
                return None
        return node

    def tokens(self, p: int) -> tuple:
        self._check(p)
        return self._tokens[p]

    def length(self, p: int) -> int:
        return len(self.tokens(p))

    def _check(self, p) -> None:
        if not isinstance(p, int) or not 0 <= p < len(self._parent):
            raise BadPathId(f"no path with id {p!r}")

    def to_tree(self) -> tuple[RootedTree, dict[int, int]]:
        """Copy of the trie as a rooted tree with unit edges.

        Children keep insertion order; labels are the incoming tokens (the
        origin is labeled ``""``). The path-id map is the identity because
        ids are trie vertices.
        """
        n = len(self._parent)
        children: list[list[int]] = [[] for _ in range(n)]
        for v in range(1, n):
            children[self._parent[v]].append(v)
        labels = [""] + [str(t) for t in self._token[1:]]
        tree = RootedTree(0, tuple(self._parent), tuple(tuple(c) for c in children), tuple(labels))
        return tree, {v: v for v in range(n)}


def insert_path(forest: PathForest, tokens: Sequence[Hashable]) -> int:
    return forest.insert_path(tokens)


def separation(forest: PathForest, p: int, q: int) -> int:
    """Length of the longest common prefix of paths ``p`` and ``q``."""
    a, b = forest.tokens(p), forest.tokens(q)
    k = 0
    for x, y in zip(a, b):
        if x != y:
            break
        k += 1
    return k


def path_distance(forest: PathForest, p: int, q: int) -> int:
    return forest.length(p) + forest.length(q) - 2 * separation(forest, p, q)


def to_tree(forest: PathForest) -> tuple[RootedTree, dict[int, int]]:
    return forest.to_tree()
