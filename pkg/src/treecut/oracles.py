"""Brute-force ground truth for the solvers and an exact tree-cut width search on tiny graphs."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from treecut.decomposition import TreeCutDecomposition
from treecut.flow import domination_assignment, vertex_cover_assignment
from treecut.graph import CapacitatedGraph, Graph, MultiGraph, three_center

INF = math.inf


class SizeGuardError(ValueError):
    pass


def cvc_witness_feasible(cg: CapacitatedGraph, C) -> bool:
    g = cg.graph
    return vertex_cover_assignment(sorted(g.edges), C, cg.capacity) is not None


def cds_witness_feasible(cg: CapacitatedGraph, D) -> bool:
    g = cg.graph
    adj = {v: g.neighbors(v) for v in g.vertices}
    return domination_assignment(g.vertices, adj, D, cg.capacity) is not None


def cvc_brute(cg: CapacitatedGraph, U=None, limit: int = 20):
    """Smallest capacitated vertex cover drawn from U (default: all vertices)."""
    U = sorted(range(cg.n) if U is None else U)
    if len(U) > limit:
        raise SizeGuardError(f"|U| = {len(U)} exceeds the guard {limit}")
    edges = sorted(cg.graph.edges)
    for size in range(len(U) + 1):
        for C in itertools.combinations(U, size):
            if vertex_cover_assignment(edges, C, cg.capacity) is not None:
                return size
    return INF


def cds_brute(cg: CapacitatedGraph, limit: int = 20):
    n = cg.n
    if n > limit:
        raise SizeGuardError(f"n = {n} exceeds the guard {limit}")
    g = cg.graph
    adj = {v: g.neighbors(v) for v in g.vertices}
    for size in range(n + 1):
        for D in itertools.combinations(range(n), size):
            if domination_assignment(range(n), adj, D, cg.capacity) is not None:
                return size
    return INF


def imb_brute(g: Graph, limit: int = 9) -> int:
    n = g.n
    if n > limit:
        raise SizeGuardError(f"n = {n} exceeds the guard {limit}")
    if n == 0:
        return 0
    edges = sorted(g.edges)
    best = None
    pos = [0] * n
    for perm in itertools.permutations(range(n)):
        for i, v in enumerate(perm):
            pos[v] = i
        bal = [0] * n
        for u, v in edges:
            if pos[u] < pos[v]:
                bal[u] += 1
                bal[v] -= 1
            else:
                bal[u] -= 1
                bal[v] += 1
        val = sum(abs(b) for b in bal)
        if best is None or val < best:
            best = val
    return best


def min_vertex_cover(g: Graph) -> int:
    """Uncapacitated minimum vertex cover by branching on an uncovered edge."""

    def rec(edges):
        if not edges:
            return 0
        u, v = edges[0]
        return 1 + min(
            rec([e for e in edges if u not in e]),
            rec([e for e in edges if v not in e]),
        )

    return rec(sorted(g.edges))


# ---------------------------------------------------------------------------
# exact tree-cut width
#
# After deleting empty leaves and splicing out empty single-child nodes (which
# never increases the width), distinct nodes of a rooted decomposition have
# distinct vertex sets Y_t, and these form a laminar family.  The width of a
# node depends only on Y_t and on how Y_t splits into the children's sets, so
# a memoised recursion over subsets visits every such decomposition exactly
# once, without any isomorphic duplicates.


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def _torso_size(g: Graph, bag, comps) -> int:
    label = {}
    fresh = g.n
    for comp in comps:
        for v in comp:
            label[v] = fresh
        fresh += 1
    verts = set(bag) | set(range(g.n, fresh))
    mult: dict = {}
    for u, v in g.edges:
        a, b = label.get(u, u), label.get(v, v)
        if a == b and a >= g.n:
            continue
        key = (a, b) if a <= b else (b, a)
        mult[key] = mult.get(key, 0) + 1
    return len(three_center(MultiGraph(frozenset(verts), mult), bag))


def tcw_exact(g: Graph, upper: int | None = None, limit: int = 8, witness: bool = False):
    """Minimum width over all tree-cut decompositions of g.

    Returns None if every decomposition is wider than ``upper``.  With
    ``witness=True`` a pair (width, decomposition) is returned instead.
    """
    n = g.n
    if n > limit:
        raise SizeGuardError(f"n = {n} exceeds the guard {limit}")
    cap = INF if upper is None else upper
    full = frozenset(range(n))
    if n == 0:
        res = (0, TreeCutDecomposition((0,), (frozenset(),), 0))
        return res if witness else 0

    @lru_cache(maxsize=None)
    def best(Y: frozenset):
        """(width, plan) for a node whose subtree vertex set is Y."""
        outside = [full - Y] if Y != full else []
        top = (INF, None)
        ys = sorted(Y)
        for r in range(len(ys) + 1):
            for bag in itertools.combinations(ys, r):
                rest = [v for v in ys if v not in bag]
                for part in _set_partitions(rest):
                    if not bag and len(part) < 2:
                        continue
                    kids = [frozenset(p) for p in part]
                    w = 0
                    for c in kids:
                        w = max(w, g.cut_size(c))
                        if w > cap or w >= top[0]:
                            break
                    if w > cap or w >= top[0]:
                        continue
                    w = max(w, _torso_size(g, frozenset(bag), outside + kids))
                    if w > cap or w >= top[0]:
                        continue
                    plans = []
                    for c in kids:
                        cw, cplan = best(c)
                        w = max(w, cw)
                        if w > cap or w >= top[0]:
                            break
                        plans.append((c, cplan))
                    else:
                        top = (w, (frozenset(bag), plans))
        return top

    w, plan = best(full)
    if w == INF:
        return None
    if not witness:
        return w
    parent, bags = [], []

    def build(p, pl):
        t = len(bags)
        parent.append(t if p is None else p)
        bag, kids = pl
        bags.append(bag)
        for _, kp in kids:
            build(t, kp)

    build(None, plan)
    return w, TreeCutDecomposition(tuple(parent), tuple(bags), 0)
