"""Hardness-reduction instance generators, special graph families, and tiny satisfiability checkers."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from treecut.decomposition import TreeCutDecomposition
from treecut.graph import Graph
from treecut.oracles import SizeGuardError

SEARCH_LIMIT = 10**7


@dataclass(frozen=True)
class MccInstance:
    """k parts of n vertices each; vertex a of part i has global id i*n + a."""

    k: int
    n: int
    edges: frozenset

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if not (0 <= u < self.k * self.n and 0 <= v < self.k * self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u // self.n == v // self.n:
                raise ValueError(f"edge ({u},{v}) lies inside one part")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    def part(self, i: int) -> range:
        return range(i * self.n, (i + 1) * self.n)

    def graph(self) -> Graph:
        return Graph(self.k * self.n, self.edges)

    def cross_pairs(self):
        """All pairs from distinct parts, ordered by (i, j) then lexicographically."""
        for i, j in itertools.combinations(range(self.k), 2):
            for a in self.part(i):
                for b in self.part(j):
                    yield (a, b)

    def non_edges(self):
        return [p for p in self.cross_pairs() if p not in self.edges]


@dataclass(frozen=True)
class ListColoringInstance:
    graph: Graph
    lists: tuple

    def __post_init__(self):
        lists = tuple(frozenset(L) for L in self.lists)
        if len(lists) != self.graph.n:
            raise ValueError("one list per vertex required")
        if any(not L for L in lists):
            raise ValueError("lists must be nonempty")
        object.__setattr__(self, "lists", lists)


@dataclass(frozen=True)
class PrecoloringInstance:
    """Vertices with ``precolor[v] is None`` may use any palette colour."""

    graph: Graph
    palette: tuple
    precolor: tuple

    def __post_init__(self):
        object.__setattr__(self, "palette", tuple(sorted(set(self.palette))))
        pre = tuple(self.precolor)
        if len(pre) != self.graph.n:
            raise ValueError("one entry per vertex required")
        for c in pre:
            if c is not None and c not in self.palette:
                raise ValueError(f"precolour {c} not in palette")
        object.__setattr__(self, "precolor", pre)

    def lists(self) -> tuple:
        full = frozenset(self.palette)
        return tuple(full if c is None else frozenset([c]) for c in self.precolor)


@dataclass(frozen=True)
class CspInstance:
    num_vars: int
    domain: tuple
    constraints: tuple  # (scope tuple, frozenset of tuples)

    def __post_init__(self):
        cons = []
        for scope, rel in self.constraints:
            scope = tuple(scope)
            if not scope or len(set(scope)) != len(scope):
                raise ValueError("scope must be a nonempty sequence of distinct variables")
            if any(not 0 <= x < self.num_vars for x in scope):
                raise ValueError("scope mentions an unknown variable")
            rel = frozenset(tuple(r) for r in rel)
            if any(len(r) != len(scope) for r in rel):
                raise ValueError("relation arity differs from scope length")
            cons.append((scope, rel))
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "constraints", tuple(cons))

    def incidence_graph(self) -> Graph:
        """Constraints are vertices 0..m-1, variable x is vertex m + x."""
        m = len(self.constraints)
        edges = {(ci, m + x) for ci, (scope, _) in enumerate(self.constraints) for x in scope}
        return Graph(m + self.num_vars, frozenset(edges))


# ---------------------------------------------------------------------------
# reductions


def mcc_to_list_coloring(m: MccInstance):
    k = m.k
    non_edges = m.non_edges()
    n_vertices = k + len(non_edges)
    lists = [frozenset(m.part(i)) for i in range(k)]
    edges = []
    for idx, (a, b) in enumerate(non_edges):
        y = k + idx
        edges.append((a // m.n, y))
        edges.append((b // m.n, y))
        lists.append(frozenset([a, b]))
    g = Graph.from_edges(n_vertices, edges)
    parent = [0] + [0] * len(non_edges)
    bags = [frozenset(range(k))] + [frozenset([k + i]) for i in range(len(non_edges))]
    return ListColoringInstance(g, tuple(lists)), TreeCutDecomposition(tuple(parent), tuple(bags), 0)


def list_to_precoloring(lc: ListColoringInstance, dec: TreeCutDecomposition):
    palette = sorted(set().union(*lc.lists)) if lc.lists else []
    g = lc.graph
    node_of = dec.node_of()
    edges = sorted(g.edges)
    precolor = [None] * g.n
    parent = list(dec.parent)
    bags = list(dec.bags)
    nxt = g.n
    for v in range(g.n):
        for c in palette:
            if c in lc.lists[v]:
                continue
            edges.append((v, nxt))
            precolor.append(c)
            parent.append(node_of[v])
            bags.append(frozenset([nxt]))
            nxt += 1
    pc = PrecoloringInstance(Graph.from_edges(nxt, edges), tuple(palette), tuple(precolor))
    return pc, TreeCutDecomposition(tuple(parent), tuple(bags), dec.root)


def csp_var(k: int, n: int, i: int, j: int, a: int) -> int:
    return (i * k + j) * n + a


def mcc_to_boolean_csp(m: MccInstance):
    k, n = m.k, m.n
    num_vars = k * k * n
    unit = [tuple(1 if b == a else 0 for b in range(n)) for a in range(n)]
    constraints = []
    for i in range(k):
        scope = tuple(csp_var(k, n, i, j, a) for j in range(k) for a in range(n))
        rel = frozenset(unit[a] * k for a in range(n))
        constraints.append((scope, rel))
    for i, j in itertools.combinations(range(k), 2):
        scope = tuple(csp_var(k, n, i, j, a) for a in range(n)) + tuple(
            csp_var(k, n, j, i, b) for b in range(n)
        )
        rel = frozenset(
            unit[a] + unit[b]
            for a in range(n)
            for b in range(n)
            if (i * n + a, j * n + b) in m.edges
        )
        constraints.append((scope, rel))
    csp = CspInstance(num_vars, (0, 1), tuple(constraints))
    mc = len(constraints)
    parent = [0] * (1 + num_vars)
    bags = [frozenset(range(mc))] + [frozenset([mc + x]) for x in range(num_vars)]
    return csp, TreeCutDecomposition(tuple(parent), tuple(bags), 0)


# ---------------------------------------------------------------------------
# graph families


def gen_star_of_stars(n: int) -> Graph:
    """Centre 0, leaves 1..n, and n subdivided paths from the centre to every leaf."""
    if n < 1:
        raise ValueError("n must be at least 1")
    edges = []
    s = n + 1
    for i in range(1, n + 1):
        for _ in range(n):
            edges.append((0, s))
            edges.append((s, i))
            s += 1
    return Graph.from_edges(s, edges)


def star_of_stars_decomposition(n: int) -> TreeCutDecomposition:
    """Centre bag at the root, one child per leaf z_i, subdivision vertices below z_i."""
    parent = [0]
    bags = [frozenset([0])]
    leaf_node = {}
    for i in range(1, n + 1):
        leaf_node[i] = len(bags)
        parent.append(0)
        bags.append(frozenset([i]))
    s = n + 1
    for i in range(1, n + 1):
        for _ in range(n):
            parent.append(leaf_node[i])
            bags.append(frozenset([s]))
            s += 1
    return TreeCutDecomposition(tuple(parent), tuple(bags), 0)


def gen_ternary_tree(depth: int) -> Graph:
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    edges = []
    level = [0]
    nxt = 1
    for _ in range(depth):
        new = []
        for v in level:
            for _ in range(3):
                edges.append((v, nxt))
                new.append(nxt)
                nxt += 1
        level = new
    return Graph.from_edges(nxt, edges)


def random_mcc(k: int, n: int, p: float, rng: random.Random) -> MccInstance:
    tmp = MccInstance(k, n, frozenset())
    return MccInstance(k, n, frozenset(e for e in tmp.cross_pairs() if rng.random() < p))


# ---------------------------------------------------------------------------
# tiny exact checkers


def has_multicolored_clique(m: MccInstance) -> bool:
    for pick in itertools.product(*[m.part(i) for i in range(m.k)]):
        if all((a, b) in m.edges for a, b in itertools.combinations(pick, 2)):
            return True
    return False


class _Budget:
    def __init__(self, limit):
        self.left = limit

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise SizeGuardError("search exceeded the node budget")


def brute_list_coloring(lc: ListColoringInstance, limit: int = SEARCH_LIMIT) -> bool:
    g = lc.graph
    order = sorted(range(g.n), key=lambda v: (len(lc.lists[v]), v))
    color = {}
    budget = _Budget(limit)

    def rec(i):
        budget.tick()
        if i == len(order):
            return True
        v = order[i]
        used = {color[u] for u in g.neighbors(v) if u in color}
        for c in sorted(lc.lists[v]):
            if c in used:
                continue
            color[v] = c
            if rec(i + 1):
                return True
            del color[v]
        return False

    return rec(0)


def brute_precoloring(pc: PrecoloringInstance, limit: int = SEARCH_LIMIT) -> bool:
    return brute_list_coloring(ListColoringInstance(pc.graph, pc.lists()), limit)


def brute_csp(csp: CspInstance, limit: int = SEARCH_LIMIT) -> bool:
    value = {}
    watching = {x: [] for x in range(csp.num_vars)}
    for ci, (scope, _) in enumerate(csp.constraints):
        for x in scope:
            watching[x].append(ci)
    budget = _Budget(limit)

    def consistent(ci):
        scope, rel = csp.constraints[ci]
        fixed = [(i, value[x]) for i, x in enumerate(scope) if x in value]
        return any(all(t[i] == val for i, val in fixed) for t in rel)

    def rec(x):
        budget.tick()
        if x == csp.num_vars:
            return True
        for d in csp.domain:
            value[x] = d
            if all(consistent(ci) for ci in watching[x]) and rec(x + 1):
                return True
            del value[x]
        return False

    if any(not rel for _, rel in csp.constraints):
        return False
    return rec(0)
