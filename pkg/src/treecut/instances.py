"""Random graphs, capacities and decompositions for tests and experiment scripts."""

from __future__ import annotations

import random

from treecut.decomposition import TreeCutDecomposition
from treecut.graph import CapacitatedGraph, Graph


def random_graph(n: int, p: float, rng: random.Random, connected: bool = False) -> Graph:
    while True:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if not connected or is_connected(g):
            return g


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen, stack = {0}, [0]
    while stack:
        v = stack.pop()
        for u in g.neighbors(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def random_capacities(g: Graph, rng: random.Random, hi: int = 3) -> CapacitatedGraph:
    return CapacitatedGraph(g, tuple(rng.randint(0, hi) for _ in range(g.n)))


def random_decomposition(
    n: int, rng: random.Random, nodes: int | None = None, empty_prob: float = 0.2
) -> TreeCutDecomposition:
    """Random rooted tree; each vertex lands in a uniformly chosen node.

    Some nodes stay empty on purpose so that contraction has work to do.
    """
    m = nodes if nodes is not None else rng.randint(1, max(1, n + n // 2))
    parent = [0] + [rng.randrange(i) for i in range(1, m)]
    perm = list(range(m))
    rng.shuffle(perm)
    # relabel so that node ids are not sorted by depth
    inv = {old: new for new, old in enumerate(perm)}
    new_parent = [0] * m
    for old in range(m):
        new_parent[inv[old]] = inv[parent[old]]
    bags = [set() for _ in range(m)]
    usable = [inv[t] for t in range(m) if rng.random() >= empty_prob] or [inv[0]]
    for v in range(n):
        bags[rng.choice(usable)].add(v)
    return TreeCutDecomposition(tuple(new_parent), tuple(bags), inv[0])
