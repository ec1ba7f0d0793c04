"""Constant-time LCA and distance queries, and the four-point test.

The index stores the Euler tour of the tree (the vertex sequence of a depth
first walk, ``2n - 1`` entries) with a sparse table over the tour depths.
The LCA of ``a`` and ``b`` is the shallowest vertex on the tour between their
first occurrences, and ``dist(a, b) = depth(a) + depth(b) - 2 depth(lca)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .errors import BadVertex, NotAMetric
from .tree import RootedTree


@dataclass(frozen=True)
class TreeMetricIndex:
    euler_tour: np.ndarray
    depth: np.ndarray
    first_occurrence: np.ndarray
    sparse_table: np.ndarray
    log2: np.ndarray
    tour_depth: np.ndarray

    @property
    def vertex_count(self) -> int:
        return len(self.depth)

    def _check(self, v) -> None:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < len(self.depth):
            raise BadVertex(f"vertex {v!r} out of range 0..{len(self.depth) - 1}")

    def _argmin(self, lo, hi):
        # tour index of the shallowest entry in [lo, hi], vectorized
        k = self.log2[hi - lo + 1]
        i = self.sparse_table[k, lo]
        j = self.sparse_table[k, hi - (1 << k) + 1]
        return np.where(self.tour_depth[i] <= self.tour_depth[j], i, j)

    def lca_many(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        fa = self.first_occurrence[a]
        fb = self.first_occurrence[b]
        lo = np.minimum(fa, fb)
        hi = np.maximum(fa, fb)
        return self.euler_tour[self._argmin(lo, hi)]

    def dist_many(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return self.depth[a] + self.depth[b] - 2 * self.depth[self.lca_many(a, b)]

    def distance_matrix(self) -> np.ndarray:
        n = self.vertex_count
        a, b = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        return self.dist_many(a, b)


def build_index(tree: RootedTree) -> TreeMetricIndex:
    """Euler tour and sparse table in O(n log n)."""
    n = tree.vertex_count
    tour = []
    first = np.full(n, -1, dtype=np.int64)
    stack = [[tree.root, 0]]
    first[tree.root] = 0
    tour.append(tree.root)
    while stack:
        frame = stack[-1]
        v, i = frame
        kids = tree.children[v]
        if i < len(kids):
            frame[1] += 1
            c = kids[i]
            first[c] = len(tour)
            tour.append(c)
            stack.append([c, 0])
        else:
            stack.pop()
            if stack:
                tour.append(stack[-1][0])
    euler = np.asarray(tour, dtype=np.int64)
    depth = np.asarray(tree.depth, dtype=np.int64)
    m = len(euler)
    log2 = np.zeros(m + 1, dtype=np.int64)
    for i in range(2, m + 1):
        log2[i] = log2[i >> 1] + 1
    levels = int(log2[m]) + 1
    table = np.zeros((levels, m), dtype=np.int64)
    table[0] = np.arange(m)
    tour_depth = depth[euler]
    for k in range(1, levels):
        half = 1 << (k - 1)
        span = m - (1 << k) + 1
        left = table[k - 1, :span]
        right = table[k - 1, half:half + span]
        table[k, :span] = np.where(tour_depth[left] <= tour_depth[right], left, right)
    for arr in (euler, depth, first, table, log2, tour_depth):
        arr.setflags(write=False)
    return TreeMetricIndex(euler, depth, first, table, log2, tour_depth)


def lca(index: TreeMetricIndex, a: int, b: int) -> int:
    index._check(a)
    index._check(b)
    return int(index.lca_many(a, b))


def dist(index: TreeMetricIndex, a: int, b: int) -> int:
    index._check(a)
    index._check(b)
    return int(index.dist_many(a, b))


@dataclass(frozen=True)
class FourPointReport:
    is_zero_hyperbolic: bool
    worst_violation: float
    witness: tuple[int, int, int, int] | None


def _as_metric(metric, tol) -> np.ndarray:
    D = np.asarray(metric)
    if D.ndim != 2 or D.shape[0] != D.shape[1]:
        raise NotAMetric("matrix is not square")
    if D.dtype.kind not in "iuf":
        try:
            D = D.astype(np.float64)
        except (TypeError, ValueError):
            raise NotAMetric("entries are not numbers") from None
    if D.dtype.kind == "f" and np.all(np.isfinite(D)) and np.all(D == np.round(D)):
        D = D.astype(np.int64)
    if D.dtype.kind == "f" and not np.all(np.isfinite(D)):
        raise NotAMetric("non-finite entry")
    if D.dtype.kind == "u":
        D = D.astype(np.int64)
    if np.any(D < 0):
        raise NotAMetric("negative entry")
    if np.any(np.diag(D) != 0):
        raise NotAMetric("nonzero diagonal")
    if np.any(np.abs(D - D.T) > tol):
        raise NotAMetric("not symmetric")
    for k in range(D.shape[0]):
        # d(i,j) <= d(i,k) + d(k,j)
        bad = D > D[:, k:k + 1] + D[k:k + 1, :] + tol
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            raise NotAMetric(f"triangle inequality fails for ({i}, {j}) via {k}")
    return D


def _excess(D, x, y, z, w):
    s1 = D[x, y] + D[z, w]
    s2 = D[x, z] + D[y, w]
    s3 = D[x, w] + D[y, z]
    hi = np.maximum(np.maximum(s1, s2), s3)
    lo = np.minimum(np.minimum(s1, s2), s3)
    mid = s1 + s2 + s3 - hi - lo
    return hi - mid


def four_point_check(metric, tol: float = 0, limit: int = 40,
                     samples: int = 200_000, seed: int = 0) -> FourPointReport:
    """Gromov's four-point condition with delta = 0.

    For each quadruple the two largest of ``d(x,y)+d(z,w)``,
    ``d(x,z)+d(y,w)`` and ``d(x,w)+d(y,z)`` must agree. The worst excess of
    the largest over the second largest is reported with the
    lexicographically smallest quadruple ``x < y < z < w`` attaining it.
    Integer-valued input is compared exactly; otherwise ``tol`` applies.

    Above ``limit`` points, ``samples`` random quadruples are drawn instead
    of the exhaustive scan.
    """
    D = _as_metric(metric, tol)
    n = D.shape[0]
    if n < 4:
        return FourPointReport(True, 0, None)
    if n > limit:
        return _sampled(D, tol, samples, seed)

    best = None
    witness = None
    idx = np.arange(n)
    for x in range(n - 3):
        # all y < z < w above x at once
        y, z, w = np.meshgrid(idx[x + 1:], idx[x + 1:], idx[x + 1:], indexing="ij")
        mask = (y < z) & (z < w)
        y, z, w = y[mask], z[mask], w[mask]
        e = _excess(D, x, y, z, w)
        j = int(np.argmax(e))  # first maximum is lexicographically smallest
        if best is None or e[j] > best:
            best = e[j]
            witness = (x, int(y[j]), int(z[j]), int(w[j]))
    worst = best.item()
    return FourPointReport(worst <= tol, worst, witness)


def _sampled(D, tol, samples, seed) -> FourPointReport:
    rng = random.Random(seed)
    n = D.shape[0]
    quads = np.array(sorted({tuple(sorted(rng.sample(range(n), 4))) for _ in range(samples)}))
    e = _excess(D, quads[:, 0], quads[:, 1], quads[:, 2], quads[:, 3])
    j = int(np.argmax(e))
    worst = e[j].item()
    return FourPointReport(worst <= tol, worst, tuple(int(v) for v in quads[j]))
