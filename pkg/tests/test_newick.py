import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_parent_tree
from rtreekit import InputError, build_tree, canonical_newick, parse_newick, to_newick


def labeled(edges, labels, **kw):
    return build_tree(edges, n=len(labels), labels=labels, **kw)


def test_single_vertex():
    assert canonical_newick(labeled([], ["v"])) == "v;"


def test_canonical_order():
    t = labeled([(0, 1), (0, 2), (1, 3)], ["v", "a", "b", "c"])
    assert canonical_newick(t) == "((c)a,b)v;"
    swapped = labeled([(0, 2), (0, 1), (1, 3)], ["v", "a", "b", "c"], child_order="input")
    assert swapped.children[0] == (2, 1)
    assert canonical_newick(swapped) == "((c)a,b)v;"


def test_shape_only():
    t = build_tree([(0, 1), (0, 2), (1, 3)])
    assert canonical_newick(t, labels=False) == "(,());"


def test_quoting():
    t = labeled([(0, 1)], ["root node", "it's"])
    s = canonical_newick(t)
    assert s == "('it''s')'root node';"
    back, _, _ = parse_newick(s)
    assert back.labels == ("root node", "it's")


@st.composite
def trees(draw):
    n = draw(st.integers(1, 30))
    seed = draw(st.integers(0, 2**32))
    rng = random.Random(seed)
    edges, root = random_parent_tree(n, rng)
    t = build_tree(edges, root=root, n=n)
    order = list(range(n))
    rng.shuffle(order)
    pos = {v: i for i, v in enumerate(order)}
    shuffled = build_tree(edges, root=root, n=n, child_order=lambda v: pos[v])
    return t, shuffled


@settings(max_examples=60, deadline=None)
@given(trees())
def test_canonical_invariant_under_child_permutation(pair):
    t, shuffled = pair
    assert canonical_newick(t) == canonical_newick(shuffled)
    assert canonical_newick(t, labels=False) == canonical_newick(shuffled, labels=False)


@settings(max_examples=60, deadline=None)
@given(trees())
def test_parse_round_trip(pair):
    t, shuffled = pair
    for tree in (t, shuffled):
        text = to_newick(tree)
        back, _, _ = parse_newick(text)
        # parse renumbers in preorder; compare through labels
        assert to_newick(back) == text
        assert canonical_newick(back) == canonical_newick(tree)


def test_lengths_and_comments():
    back, lengths, comments = parse_newick("(a[&height=5]:3,b:1.5)r[&height=2];")
    assert back.labels == ("r", "a", "b")
    assert lengths == {1: 3.0, 2: 1.5}
    assert comments == {0: "&height=2", 1: "&height=5"}


@pytest.mark.parametrize("bad", ["(a,b)", "(a,b;", "a,b);", "(a:x)r;", "a(b);", "(a)(b);"])
def test_parse_errors(bad):
    with pytest.raises(InputError):
        parse_newick(bad)
