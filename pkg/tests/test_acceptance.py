"""Exit criteria. Each test carries an ``acceptance`` mark; the summary at the
end of the run prints one PASS/FAIL line per criterion."""

import random
import subprocess
import sys
import time
from pathlib import Path

import networkx as nx
import numpy as np
import pytest

from oracles import (
    all_dyck_paths,
    all_plane_trees,
    bfs_distances,
    catalan,
    maximin_closure,
    random_connected_graph,
    random_parent_tree,
    random_paths,
    weighted_tree_distances,
)
from rtreekit import (
    PathForest,
    RootedTree,
    ScalarField,
    build_index,
    build_merge,
    build_tree,
    component_at,
    contour_distance,
    decode,
    encode,
    excursion_distance,
    four_point_check,
    merge_level,
    path_distance,
    quotient_tree,
    to_tree,
    validate_excursion,
)
from rtreekit.excursion import encode_with_visits, excursion_distance_matrix

GOLDEN = Path(__file__).parent / "golden"
CYCLE4 = [[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]]


@pytest.fixture(scope="module")
def random_trees():
    rng = random.Random(2024)
    out = []
    for _ in range(100):
        edges, root = random_parent_tree(500, rng)
        out.append((edges, build_tree(edges, root=root, n=500)))
    return out


@pytest.fixture(scope="module")
def random_fields():
    rng = random.Random(7)
    out = []
    for _ in range(200):
        n = rng.randint(1, 40)
        edges = random_connected_graph(n, rng)
        values = [rng.randint(0, 20) for _ in range(n)]
        field = ScalarField.from_edges(values, edges)
        out.append((field, values, edges, build_merge(field)))
    return out


@pytest.mark.acceptance("AC1 codec exhaustive round trip (<= 8 edges, < 30 s)")
def test_ac1_codec_round_trip():
    start = time.perf_counter()
    for m in range(1, 9):
        paths = all_dyck_paths(m)
        assert len(paths) == catalan(m)
        for h in paths:
            e = validate_excursion(h)
            assert list(encode(decode(e)).heights) == h
    assert len(all_dyck_paths(8)) == 1430
    for m in range(0, 9):
        trees = all_plane_trees(m)
        assert len(trees) == catalan(m)
        for parent, children in trees:
            t = RootedTree(0, tuple(parent), tuple(tuple(c) for c in children))
            assert decode(encode(t)) == t
    assert time.perf_counter() - start < 30


@pytest.mark.acceptance("AC2 metric agreement on 100 random trees, n = 500 (< 60 s)")
def test_ac2_metric_agreement(random_trees):
    start = time.perf_counter()
    rng = random.Random(1)
    for edges, t in random_trees:
        B = bfs_distances(500, edges)
        index = build_index(t)
        assert np.array_equal(index.distance_matrix(), B)
        exc, visits = encode_with_visits(t)
        first = {}
        for k, v in enumerate(visits):
            first.setdefault(v, k)
        times = [first[v] for v in range(500)]
        assert np.array_equal(excursion_distance_matrix(exc, times), B)
        for _ in range(200):
            a, b = rng.randrange(len(exc)), rng.randrange(len(exc))
            assert excursion_distance(exc, a, b) == B[visits[a], visits[b]]
    assert time.perf_counter() - start < 60


@pytest.mark.acceptance("AC3 zero-hyperbolicity of tree metrics; 4-cycle violation 2")
def test_ac3_zero_hyperbolic(random_trees):
    rng = random.Random(3)
    for _, t in random_trees:
        D = build_index(t).distance_matrix()
        pick = sorted(rng.sample(range(500), 40))
        report = four_point_check(D[np.ix_(pick, pick)])
        assert report.is_zero_hyperbolic
        assert report.worst_violation == 0
    cycle = four_point_check(CYCLE4)
    assert cycle.worst_violation == 2
    assert not cycle.is_zero_hyperbolic
    assert cycle.witness == (0, 1, 2, 3)


def threshold_scan(field, values):
    """lambda(y, z) for all pairs from flood fills at every level."""
    n = field.n
    levels = sorted(set(values), reverse=True)
    L = [[None] * n for _ in range(n)]
    for y in range(n):
        for lam in levels:
            if lam > values[y]:
                continue
            for z in component_at(field, y, lam):
                if L[y][z] is None and lam <= values[z]:
                    L[y][z] = lam
    return L


@pytest.mark.acceptance("AC4 lambda equals maximin-path and threshold-scan oracles")
def test_ac4_contour_oracles(random_fields):
    for field, values, edges, merge in random_fields:
        n = field.n
        W = maximin_closure(values, edges)
        T = threshold_scan(field, values)
        for y in range(n):
            for z in range(n):
                lam = merge_level(merge, y, z)
                assert lam == W[y][z] == T[y][z]


@pytest.mark.acceptance("AC5 pseudo-metric triangle inequality and min-inequality")
def test_ac5_pseudometric(random_fields):
    for field, values, _, merge in random_fields:
        n = field.n
        L = np.array([[merge_level(merge, a, b) for b in range(n)] for a in range(n)], dtype=np.int64)
        D = np.array([[contour_distance(merge, a, b) for b in range(n)] for a in range(n)],
                     dtype=np.int64)
        h = np.array(values, dtype=np.int64)
        assert np.array_equal(D, h[:, None] + h[None, :] - 2 * L)
        assert np.array_equal(D, D.T) and not np.diag(D).any()
        for z in range(n):
            # over all x, y at once
            assert (np.minimum(L[:, z][:, None], L[z, :][None, :]) <= L).all()
            assert (D <= D[:, z][:, None] + D[z, :][None, :]).all()


@pytest.mark.acceptance("AC6 quotient tree reproduces contour_distance and is 0-hyperbolic")
def test_ac6_quotient(random_fields):
    for field, _, _, merge in random_fields:
        q = quotient_tree(merge)
        t = q.tree
        G = nx.Graph()
        G.add_nodes_from(range(t.vertex_count))
        G.add_edges_from(t.edges())
        assert nx.is_connected(G) and nx.is_tree(G)
        W = weighted_tree_distances(t.vertex_count, [(p, c, q.edge_length[c]) for p, c in t.edges()])
        for x in range(field.n):
            for y in range(field.n):
                assert W[q.class_of[x], q.class_of[y]] == contour_distance(merge, x, y)
        report = four_point_check(W.astype(np.int64))
        assert report.worst_violation == 0 and report.is_zero_hyperbolic


@pytest.mark.acceptance("AC7 path-forest isometry on 100 random path sets")
def test_ac7_path_forest():
    rng = random.Random(11)
    for _ in range(100):
        paths = random_paths(rng, rng.randint(1, 50), alphabet="abcd", max_len=10)
        forest = PathForest()
        ids = [forest.insert_path(p) for p in paths]
        tree, mapping = to_tree(forest)
        index = build_index(tree)
        a = np.array([mapping[p] for p in ids])
        got = index.dist_many(a[:, None], a[None, :])
        want = np.array([[path_distance(forest, p, q) for q in ids] for p in ids])
        assert np.array_equal(got, want)


def _cli(args, stdin_path=None, stdin_text=None):
    text = stdin_text if stdin_path is None else stdin_path.read_text()
    res = subprocess.run([sys.executable, "-m", "rtreekit", *args], input=text,
                         capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
    return res.stdout


@pytest.mark.acceptance("AC8 CLI determinism against golden files")
def test_ac8_cli_golden():
    tree_file = GOLDEN / "tree.txt"
    runs = []
    for _ in range(2):
        exc = _cli(["encode"], tree_file)
        runs.append((exc, _cli(["decode"], stdin_text=exc)))
    assert runs[0] == runs[1]
    assert runs[0][0] == (GOLDEN / "tree.exc").read_text()
    assert runs[0][1] == (GOLDEN / "tree.roundtrip.newick").read_text()

    for name in ("field", "path_field"):
        outs = [_cli(["contour-tree", "--format", "newick"], GOLDEN / f"{name}.txt") for _ in range(2)]
        assert outs[0] == outs[1] == (GOLDEN / f"{name}.contour.newick").read_text()
