import pytest
from hypothesis import given

from treecut.decomposition import TreeCutDecomposition, metrics, validate
from treecut.graph import Graph
from treecut.nice import (
    RerouteTrace,
    TreeDecomposition,
    all_partitions,
    bad_neighbors,
    bad_nodes,
    contract_empty,
    is_nice,
    nicify,
    partition_children,
    reroute,
    to_tree_decomposition,
    top_down_reroute,
    validate_tree_decomposition,
)

from helpers import graph_with_decomposition, path


def split_edge():
    """Edge 0-1 with an empty root and one child per endpoint."""
    return path(2), TreeCutDecomposition((0, 0, 0), (set(), {0}, {1}))


def test_single_node_is_nice():
    assert is_nice(path(3), TreeCutDecomposition.single(3))


def test_split_edge_is_bad_and_one_reroute_fixes_it():
    g, dec = split_edge()
    assert not is_nice(g, dec)
    assert bad_nodes(g, dec) == [1, 2]
    fixed = reroute(g, dec, 1)
    assert fixed.parent[1] == 2
    assert is_nice(g, fixed)
    assert top_down_reroute(g, dec).steps == 1


def test_reroute_refuses_good_node():
    g, dec = split_edge()
    with pytest.raises(ValueError):
        reroute(g, dec, 0)


def test_reroute_goes_below_deepest_bad_neighbor():
    # root empty; T={0}; S={1} with child D={2}; N(0) = {2} sits in D only
    g = Graph.from_edges(3, [(0, 2), (1, 2)])
    dec = TreeCutDecomposition((0, 0, 0, 2), (set(), {0}, {1}, {2}))
    assert bad_neighbors(g, dec, 1) == [3]
    assert reroute(g, dec, 1).parent[1] == 3


def test_nice_input_needs_no_steps():
    g = path(3)
    tr = top_down_reroute(g, TreeCutDecomposition.single(3))
    assert tr.steps == 0 and tr.moves == []


def test_contract_empty_cases():
    chain = TreeCutDecomposition((0, 0, 1), ({0}, set(), {1}))
    assert contract_empty(chain) == TreeCutDecomposition((0, 0), ({0}, {1}))
    leaf = TreeCutDecomposition((0, 0), ({0}, set()))
    assert contract_empty(leaf) == TreeCutDecomposition((0,), ({0},))
    full = TreeCutDecomposition((0, 0, 1), ({0}, {1}, {2}))
    assert contract_empty(full) == full


def test_contract_empty_splices_empty_root():
    dec = TreeCutDecomposition((0, 0, 1), (set(), {0}, {1}))
    out = contract_empty(dec)
    assert out.size == 2 and out.bags[out.root] == {0}


def test_example7_is_not_nice(example7):
    # the e-f edge makes the thin node {e} see its sibling {f}
    g, dec = example7
    assert bad_nodes(g, dec) == [3, 4]
    out = nicify(g, dec)
    assert is_nice(g, out)
    assert out.parent[3] == 4 and out.size == 6
    part = partition_children(g, out, 0)
    assert part.a_set == {1} and part.b_set == {4, 5}
    assert metrics(g, out).width == 3


def test_partition_of_leaf_is_empty(example7):
    g, dec = example7
    out = nicify(g, dec)
    part = partition_children(g, out, 5)
    assert not part.a_set and not part.b_set


def test_partition_requires_nice(example7):
    g, dec = example7
    with pytest.raises(ValueError):
        partition_children(g, dec, 0)


def test_single_node_export():
    td = to_tree_decomposition(path(3), TreeCutDecomposition.single(3))
    assert td.bags == (frozenset({0, 1, 2}),)


def test_example7_export(example7):
    g, dec = example7
    td = to_tree_decomposition(g, nicify(g, dec))
    assert validate_tree_decomposition(g, td) is None
    assert td.width <= 27


def test_tree_decomposition_validator_catches_broken_edge():
    g = path(3)
    td = TreeDecomposition((0, 0), (frozenset({0, 1}), frozenset({2})))
    assert validate_tree_decomposition(g, td) is not None


@given(graph_with_decomposition(max_n=9))
def test_each_reroute_step_is_monotone(pair):
    g, dec = pair
    cur = contract_empty(dec)
    steps = 0
    while True:
        bad = bad_nodes(g, cur)
        if not bad:
            break
        depth = cur.depth
        t = min(bad, key=lambda s: (depth[s], s))
        nxt = reroute(g, cur, t)
        before, after = metrics(g, cur), metrics(g, nxt)
        for s in cur.nodes:
            assert after.adhesion[s] <= before.adhesion[s]
            assert after.torso_size[s] <= before.torso_size[s]
        cur = nxt
        steps += 1
        assert steps <= 2 * dec.size


@given(graph_with_decomposition(max_n=10))
def test_nicify_contract(pair):
    g, dec = pair
    trace = RerouteTrace(dec)
    out = nicify(g, dec, trace)
    assert validate(g, out)
    assert is_nice(g, out)
    assert metrics(g, out).width <= metrics(g, dec).width
    assert out.size <= min(dec.size, 2 * g.n)
    k = metrics(g, out).width
    for part in all_partitions(g, out):
        assert len(part.a_set) <= 2 * k + 1
    td = to_tree_decomposition(g, out)
    assert validate_tree_decomposition(g, td) is None
    assert td.width <= 2 * k * k + 3 * k
