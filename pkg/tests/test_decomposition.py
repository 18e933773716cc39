import pytest
from hypothesis import given, strategies as st

from treecut.decomposition import TreeCutDecomposition, metrics, reroot, torso, validate, width
from treecut.graph import Graph

from helpers import graph_with_decomposition, path

EXAMPLE_PAIRS = [(2, 0), (3, 3), (3, 3), (1, 2), (1, 2), (1, 1)]


def test_example7_metrics(example7):
    g, dec = example7
    assert validate(g, dec)
    met = metrics(g, dec)
    assert list(zip(met.torso_size, met.adhesion)) == EXAMPLE_PAIRS
    assert met.width == 3


def test_example7_torso_at_a(example7):
    g, dec = example7
    h = torso(g, dec, 1)
    # the upward component {d,e,f,g} becomes 7, the child {b,c} becomes 8
    assert h.vertices == {0, 7, 8}
    assert dict(h.mult) == {(0, 7): 1, (0, 8): 1, (7, 8): 2}


def test_validate_rejects_overlap_and_cycles():
    g = path(2)
    assert not validate(g, TreeCutDecomposition((0, 0), ({0, 1}, {1})))
    cyc = TreeCutDecomposition((0, 2, 1), ({0}, {1}, set()))
    rep = validate(g, cyc)
    assert not rep and "tree" in rep.message


def test_validate_rejects_missing_vertex():
    assert not validate(path(3), TreeCutDecomposition((0, 0), ({0}, {1})))


def test_single_node_decomposition():
    g = path(4)
    met = metrics(g, TreeCutDecomposition.single(4))
    assert met.adhesion == [0] and met.torso_size == [4] and met.width == 4


def test_single_edge_two_nodes():
    g = path(2)
    dec = TreeCutDecomposition((0, 0), ({0}, {1}))
    met = metrics(g, dec)
    assert met.adhesion == [0, 1]
    assert met.torso_size == [1, 1]
    assert met.width == 1


def test_empty_leaf_torso_is_one_vertex():
    g = path(2)
    dec = TreeCutDecomposition((0, 0), ({0, 1}, set()))
    h = torso(g, dec, 1)
    assert len(h.vertices) == 1 and not h.mult
    # an empty bag may end up with torso-size 0
    assert metrics(g, dec).torso_size[1] == 0


@given(graph_with_decomposition(max_n=8), st.randoms(use_true_random=False))
def test_reroot_keeps_torso_sizes(pair, rng):
    g, dec = pair
    r = rng.randrange(dec.size)
    before = metrics(g, dec)
    after = metrics(g, reroot(dec, r))
    assert validate(g, reroot(dec, r))
    assert before.torso_size == after.torso_size


@given(graph_with_decomposition(max_n=8))
def test_adhesion_is_cut_size(pair):
    g, dec = pair
    met = metrics(g, dec)
    for t in dec.nodes:
        assert met.adhesion[t] == (0 if t == dec.root else g.cut_size(met.y_set[t]))
    assert width(g, dec) == met.width
