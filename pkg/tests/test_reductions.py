import itertools

import pytest
from hypothesis import given, strategies as st

from treecut.decomposition import metrics, validate
from treecut.graph import Graph
from treecut.oracles import SizeGuardError
from treecut.reductions import (
    ListColoringInstance,
    MccInstance,
    brute_csp,
    brute_list_coloring,
    brute_precoloring,
    gen_star_of_stars,
    gen_ternary_tree,
    has_multicolored_clique,
    list_to_precoloring,
    mcc_to_boolean_csp,
    mcc_to_list_coloring,
    random_mcc,
    star_of_stars_decomposition,
)

from helpers import complete, path


def test_mcc_rejects_edge_inside_part():
    with pytest.raises(ValueError):
        MccInstance(2, 2, frozenset({(0, 1)}))


def test_two_parts_with_edge():
    m = MccInstance(2, 1, frozenset({(0, 1)}))
    lc, dec = mcc_to_list_coloring(m)
    assert lc.graph.n == 2 and lc.graph.m == 0
    assert has_multicolored_clique(m) and brute_list_coloring(lc)
    csp, _ = mcc_to_boolean_csp(m)
    assert brute_csp(csp)


def test_two_parts_without_edge():
    m = MccInstance(2, 1, frozenset())
    lc, dec = mcc_to_list_coloring(m)
    assert lc.graph.n == 3 and lc.lists[2] == {0, 1}
    assert not has_multicolored_clique(m) and not brute_list_coloring(lc)


def test_csp_unsatisfiable_without_edges():
    csp, _ = mcc_to_boolean_csp(MccInstance(2, 2, frozenset()))
    assert not brute_csp(csp)


def test_precoloring_pendants():
    g = Graph(2, frozenset())
    lc = ListColoringInstance(g, ({"a", "b"}, {"a"}))
    from treecut.decomposition import TreeCutDecomposition

    pc, dec = list_to_precoloring(lc, TreeCutDecomposition((0, 0), ({0}, {1})))
    assert pc.graph.n == 3
    assert pc.graph.neighbors(2) == {1} and pc.precolor[2] == "b"
    assert validate(pc.graph, dec)


def test_list_coloring_checker():
    assert brute_list_coloring(ListColoringInstance(Graph(0, frozenset()), ()))
    assert not brute_list_coloring(ListColoringInstance(path(2), ({1}, {1})))
    assert not brute_list_coloring(ListColoringInstance(complete(3), ({1, 2},) * 3))


def test_checker_budget():
    lc = ListColoringInstance(complete(6), ({1, 2, 3, 4, 5},) * 6)
    with pytest.raises(SizeGuardError):
        brute_list_coloring(lc, limit=50)


def test_star_of_stars_sizes():
    assert (gen_star_of_stars(1).n, gen_star_of_stars(1).m) == (3, 2)
    assert (gen_star_of_stars(2).n, gen_star_of_stars(2).m) == (7, 8)
    assert (gen_star_of_stars(3).n, gen_star_of_stars(3).m) == (13, 18)


def test_star_of_stars_natural_decomposition():
    # centre torso keeps the centre plus every leaf node once n >= 3
    for n, w in ((1, 2), (2, 2), (3, 4), (4, 5)):
        g, dec = gen_star_of_stars(n), star_of_stars_decomposition(n)
        assert validate(g, dec)
        assert metrics(g, dec).width == w


def test_star_of_stars_one_as_chain():
    from treecut.decomposition import TreeCutDecomposition

    g = gen_star_of_stars(1)
    dec = TreeCutDecomposition((0, 0, 1), ({0}, {2}, {1}))
    assert validate(g, dec) and metrics(g, dec).width == 1


def test_ternary_tree_sizes():
    assert [gen_ternary_tree(d).n for d in (0, 1, 2)] == [1, 4, 13]


@given(st.integers(2, 3), st.integers(1, 3), st.randoms(use_true_random=False))
def test_reductions_agree(k, n, rng):
    m = random_mcc(k, n, rng.choice([0.3, 0.6, 0.9]), rng)
    truth = has_multicolored_clique(m)
    lc, d1 = mcc_to_list_coloring(m)
    pc, d2 = list_to_precoloring(lc, d1)
    csp, d3 = mcc_to_boolean_csp(m)
    assert brute_list_coloring(lc) == truth
    assert brute_precoloring(pc) == truth
    assert brute_csp(csp) == truth
    for g, d, w in ((lc.graph, d1, k), (pc.graph, d2, k), (csp.incidence_graph(), d3, k + k * (k - 1) // 2)):
        assert validate(g, d)
        assert metrics(g, d).width == w
