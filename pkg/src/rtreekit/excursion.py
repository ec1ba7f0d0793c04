"""Coding rooted ordered trees by lattice excursions.

Walking a tree depth first, first child first, and writing down the distance
from the root after every step gives a nonnegative path with unit steps that
starts and ends at zero. The walk crosses every edge once down and once up,
so a tree with ``m`` edges gives ``2m + 1`` heights. The map is a bijection
between ordered trees and such paths (Dyck paths).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import BadEndpoint, BadStep, IndexOutOfRange, NegativeHeight, RTreeError
from .tree import RootedTree


@dataclass(frozen=True)
class Excursion:
    heights: tuple[int, ...]

    def __post_init__(self):
        _check(self.heights)

    def __len__(self) -> int:
        return len(self.heights)

    def __getitem__(self, k):
        return self.heights[k]

    @property
    def edge_count(self) -> int:
        return (len(self.heights) - 1) // 2

    def __str__(self) -> str:
        return " ".join(map(str, self.heights))


def _check(h: Sequence[int]) -> None:
    if len(h) == 0:
        raise BadEndpoint("empty sequence")
    if h[0] != 0 or h[-1] != 0:
        raise BadEndpoint(f"endpoints must be 0, got {h[0]} and {h[-1]}")
    for k in range(len(h)):
        if h[k] < 0:
            raise NegativeHeight(k)
        if k + 1 < len(h) and abs(h[k + 1] - h[k]) != 1:
            raise BadStep(k)


def validate_excursion(seq: Sequence[int]) -> Excursion:
    """Return ``seq`` as an :class:`Excursion` or raise the first violation."""
    try:
        heights = tuple(int(x) for x in seq)
    except (TypeError, ValueError) as exc:
        raise RTreeError(f"heights must be integers: {exc}") from None
    if any(h != x for h, x in zip(heights, seq)):
        raise RTreeError("heights must be integers")
    return Excursion(heights)


def encode_with_visits(tree: RootedTree) -> tuple[Excursion, list[int]]:
    """Encode ``tree`` and also return the vertex occupied at each time."""
    heights = [0]
    visits = [tree.root]
    # stack of (vertex, index of next child)
    stack = [[tree.root, 0]]
    while stack:
        frame = stack[-1]
        v, i = frame
        kids = tree.children[v]
        if i < len(kids):
            frame[1] += 1
            stack.append([kids[i], 0])
            heights.append(len(stack) - 1)
            visits.append(kids[i])
        else:
            stack.pop()
            if stack:
                heights.append(len(stack) - 1)
                visits.append(stack[-1][0])
    return Excursion(tuple(heights)), visits


def encode(tree: RootedTree) -> Excursion:
    return encode_with_visits(tree)[0]


def decode_with_visits(exc: Excursion) -> tuple[RootedTree, list[int]]:
    """Decode ``exc``; vertex ids are assigned in order of first visit."""
    h = exc.heights
    parent = [0]
    children: list[list[int]] = [[]]
    visits = [0]
    current = 0
    for k in range(1, len(h)):
        if h[k] > h[k - 1]:
            v = len(parent)
            parent.append(current)
            children.append([])
            children[current].append(v)
            current = v
        else:
            current = parent[current]
        visits.append(current)
    tree = RootedTree(0, tuple(parent), tuple(tuple(c) for c in children))
    return tree, visits


def decode(exc: Excursion) -> RootedTree:
    """Recover the ordered tree coded by ``exc``.

    Times at excursion distance zero share a vertex; consecutive times are
    one apart and give the edges. The root is the class of time 0 and child
    order is order of first visit, so ``encode(decode(e)) == e``.
    """
    return decode_with_visits(exc)[0]


def excursion_distance(exc: Excursion, m: int, n: int) -> int:
    """``h(m) + h(n) - 2 min h`` over the closed index range between m and n."""
    L = len(exc.heights)
    for t in (m, n):
        if not isinstance(t, (int, np.integer)) or not 0 <= t < L:
            raise IndexOutOfRange(f"time {t!r} outside 0..{L - 1}")
    if m > n:
        m, n = n, m
    h = exc.heights
    return h[m] + h[n] - 2 * min(h[m:n + 1])


def excursion_distance_matrix(exc: Excursion, times: Sequence[int]) -> np.ndarray:
    """Pairwise :func:`excursion_distance` over ``times`` (vectorized)."""
    h = np.asarray(exc.heights, dtype=np.int64)
    t = np.asarray(times, dtype=np.int64)
    if t.size and (t.min() < 0 or t.max() >= h.size):
        raise IndexOutOfRange("time outside excursion")
    order = np.argsort(t, kind="stable")
    ts = t[order]
    k = ts.size
    out = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        # running minimum of h from ts[i] onwards, sampled at later times
        run = np.minimum.accumulate(h[ts[i]:])
        lo = run[ts[i:] - ts[i]]
        out[i, i:] = h[ts[i]] + h[ts[i:]] - 2 * lo
    out = np.triu(out) + np.triu(out, 1).T
    inv = np.empty_like(order)
    inv[order] = np.arange(k)
    return out[np.ix_(inv, inv)]


def root_degree(exc: Excursion) -> int:
    return sum(1 for x in exc.heights[1:] if x == 0)


def random_excursion(edge_count: int, seed: int | None = None) -> Excursion:
    """Uniform random Dyck excursion with ``edge_count`` up steps.

    Shuffle ``edge_count + 1`` up steps and ``edge_count`` down steps. By the
    cycle lemma exactly one rotation has all partial sums positive; dropping
    its leading up step leaves a Dyck path, and every Dyck path arises from
    the same number of sequences.
    """
    if edge_count < 1:
        raise ValueError("edge_count must be positive")
    rng = random.Random(seed)
    steps = [1] * (edge_count + 1) + [-1] * edge_count
    rng.shuffle(steps)
    # rotation starts just after the last position of the minimum prefix sum
    s, best, start = 0, 0, 0
    for i, x in enumerate(steps):
        s += x
        if s <= best:
            best, start = s, i + 1
    rotated = steps[start:] + steps[:start]
    heights = [0]
    for x in rotated[1:]:
        heights.append(heights[-1] + x)
    return Excursion(tuple(heights))
