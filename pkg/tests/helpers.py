"""Shared hypothesis strategies and small builders for the test suite."""

import random

from hypothesis import strategies as st

from treecut.graph import CapacitatedGraph, Graph
from treecut.instances import random_capacities, random_decomposition, random_graph


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def caps(g: Graph, *values) -> CapacitatedGraph:
    return CapacitatedGraph(g, values)


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from([0.2, 0.35, 0.5, 0.7]))
    rng = draw(st.randoms(use_true_random=False))
    return random_graph(n, p, rng, connected=connected)


@st.composite
def graph_with_decomposition(draw, min_n=1, max_n=7, connected=False):
    g = draw(graphs(min_n, max_n, connected))
    rng = draw(st.randoms(use_true_random=False))
    return g, random_decomposition(g.n, rng)


@st.composite
def capacitated_with_decomposition(draw, min_n=1, max_n=6, connected=False):
    g, dec = draw(graph_with_decomposition(min_n, max_n, connected))
    rng = draw(st.randoms(use_true_random=False))
    return random_capacities(g, rng), dec


def seeded(seed: int) -> random.Random:
    return random.Random(seed)


def random_ilp(rng: random.Random, max_vars: int = 6, max_points: int = 10**5):
    """Random bounded ILP whose box holds at most ``max_points`` integer points."""
    from treecut.ilp import IlpInstance

    p = rng.randint(1, max_vars)
    variables, points = [], 1
    for i in range(p):
        room = max(1, int((max_points // points) ** (1 / (p - i))))
        width = rng.randint(0, min(room - 1, 12))
        lb = rng.randint(-5, 5)
        variables.append((f"x{i}", lb, lb + width))
        points *= width + 1
    cons = []
    for _ in range(rng.randint(0, 4)):
        row = tuple(rng.randint(-4, 4) for _ in range(p))
        rel = rng.choice(["<=", "=", ">="])
        rhs = rng.randint(-10, 20)
        cons.append((row, rel, rhs))
    obj = tuple(rng.randint(-5, 5) for _ in range(p))
    return IlpInstance(tuple(variables), tuple(cons), obj)


def ilp_by_enumeration(inst):
    """Minimum objective over the whole box via numpy, or None if infeasible."""
    import numpy as np

    axes = [np.arange(lb, ub + 1, dtype=np.int64) for _, lb, ub in inst.variables]
    grid = np.stack([a.ravel() for a in np.meshgrid(*axes, indexing="ij")], axis=1)
    ok = np.ones(len(grid), dtype=bool)
    for row, rel, rhs in inst.constraints:
        s = grid @ np.array(row, dtype=np.int64)
        ok &= {"<=": s <= rhs, ">=": s >= rhs, "=": s == rhs}[rel]
    if not ok.any():
        return None
    return int((grid[ok] @ np.array(inst.objective, dtype=np.int64)).min())
