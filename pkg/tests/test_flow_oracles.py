import pytest
from hypothesis import given, strategies as st

from treecut.decomposition import metrics, validate
from treecut.flow import b_matching
from treecut.graph import CapacitatedGraph, Graph
from treecut.oracles import (
    INF,
    SizeGuardError,
    cds_brute,
    cds_witness_feasible,
    cvc_brute,
    cvc_witness_feasible,
    imb_brute,
    min_vertex_cover,
    tcw_exact,
)
from treecut.reductions import gen_star_of_stars

from helpers import caps, complete, graphs, path, star


def test_b_matching_respects_capacity():
    assert b_matching([["a"], ["a"]], {"a": 1}) is None
    res = b_matching([["a", "b"], ["a"]], {"a": 1, "b": 1})
    assert res == ["b", "a"]


def test_cvc_witness_examples():
    assert cvc_witness_feasible(caps(Graph(3, frozenset()), 0, 0, 0), set())
    assert cvc_witness_feasible(caps(star(3), 3, 0, 0, 0), {0})
    assert not cvc_witness_feasible(caps(star(3), 2, 0, 0, 0), {0})
    assert not cvc_witness_feasible(caps(path(2), 0, 5), {0})


def test_cds_witness_examples():
    assert cds_witness_feasible(caps(path(3), 0, 0, 0), {0, 1, 2})
    assert cds_witness_feasible(caps(path(2), 1, 0), {0})
    assert not cds_witness_feasible(caps(path(2), 0, 0), {0})
    assert cds_witness_feasible(caps(star(3), 3, 0, 0, 0), {0})
    assert not cds_witness_feasible(caps(star(3), 2, 0, 0, 0), {0})


def test_cvc_brute_examples():
    assert cvc_brute(caps(Graph(2, frozenset()), 0, 0)) == 0
    assert cvc_brute(caps(path(2), 1, 1)) == 1
    assert cvc_brute(CapacitatedGraph(complete(4), (2,) * 4)) == 3
    assert cvc_brute(caps(path(2), 0, 0)) == INF


def test_cds_brute_examples():
    assert cds_brute(caps(Graph(1, frozenset()), 0)) == 1
    assert cds_brute(caps(path(2), 0, 0)) == 2
    assert cds_brute(caps(star(3), 3, 0, 0, 0)) == 1


def test_imb_brute_examples():
    assert imb_brute(path(2)) == 2
    assert imb_brute(path(3)) == 2
    assert imb_brute(complete(3)) == 4
    assert imb_brute(star(3)) == 4


def test_tcw_examples():
    assert tcw_exact(Graph(1, frozenset())) == 1
    assert tcw_exact(path(2)) == 1
    assert tcw_exact(gen_star_of_stars(2)) == 2


def test_tcw_witness_is_valid(example7):
    g, _ = example7
    w, dec = tcw_exact(g, witness=True)
    assert w == 2 and validate(g, dec) and metrics(g, dec).width == 2


def test_tcw_upper_cap():
    assert tcw_exact(complete(4), upper=2) is None


def test_size_guards():
    with pytest.raises(SizeGuardError):
        imb_brute(path(10))
    with pytest.raises(SizeGuardError):
        cds_brute(CapacitatedGraph(path(21), (1,) * 21))
    with pytest.raises(SizeGuardError):
        tcw_exact(path(9))


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_oracles_are_relabel_invariant(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    cap = tuple(rng.randint(0, 3) for _ in range(g.n))
    hcap = [0] * g.n
    for v, c in enumerate(cap):
        hcap[perm[v]] = c
    assert cvc_brute(CapacitatedGraph(g, cap)) == cvc_brute(CapacitatedGraph(h, hcap))
    assert cds_brute(CapacitatedGraph(g, cap)) == cds_brute(CapacitatedGraph(h, hcap))
    assert imb_brute(g) == imb_brute(h)


@given(graphs(max_n=8))
def test_cvc_with_large_capacities_is_vertex_cover(g):
    cg = CapacitatedGraph(g, tuple(g.degree(v) for v in g.vertices))
    assert cvc_brute(cg) == min_vertex_cover(g)


@given(graphs(max_n=7))
def test_imbalance_at_least_odd_degree_count(g):
    odd = sum(1 for v in g.vertices if g.degree(v) % 2)
    assert imb_brute(g) >= odd
