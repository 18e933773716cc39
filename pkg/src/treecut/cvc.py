"""Capacitated Vertex Cover by dynamic programming over a nice tree-cut decomposition.

Table of node t: ``a`` is the smallest capacitated cover of G[Y_t] using only
Y_t, and ``beta[E']`` for E' a subset of K_t (edges leaving Y_t) is the extra
cost of also covering E' from inside Y_t.  The outside endpoints get capacity 0.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field

from treecut.dp import DpContext, prepare
from treecut.flow import vertex_cover_assignment
from treecut.graph import CapacitatedGraph
from treecut.ilp import IlpInstance, solve_min

log = logging.getLogger(__name__)
INF = math.inf


@dataclass
class CvcTable:
    a: float
    beta: dict  # frozenset of K_t edges -> int or INF
    k_edges: tuple = ()

    def cost(self, sub) -> float:
        return self.a + self.beta[frozenset(sub)]


def _subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        for c in itertools.combinations(items, r):
            yield frozenset(c)


def _table_from_costs(costs: dict, k_edges) -> CvcTable:
    a = costs[frozenset()]
    if a == INF:
        return CvcTable(INF, {s: INF for s in costs}, k_edges)
    return CvcTable(a, {s: (c - a if c < INF else INF) for s, c in costs.items()}, k_edges)


def min_cover_within(edges, Y, capacity) -> float:
    """Smallest C within Y with a capacity-respecting edge assignment into C."""
    Y = sorted(Y)
    touched = sorted({v for e in edges for v in e if v in Y})
    for r in range(len(touched) + 1):
        for C in itertools.combinations(touched, r):
            if vertex_cover_assignment(edges, C, capacity) is not None:
                return r
    return INF


def cvc_node_table_exhaustive(cg: CapacitatedGraph, ctx: DpContext, t: int) -> CvcTable:
    """Table of any node by direct search over subsets of Y_t (small Y_t only)."""
    y = ctx.y(t)
    inner = cg.graph.edges_within(y)
    k_edges = ctx.k_edges(t)
    costs = {}
    for sub in _subsets(k_edges):
        costs[sub] = min_cover_within(inner + sorted(sub), y, cg.capacity)
    return _table_from_costs(costs, k_edges)


def cvc_leaf_table(cg: CapacitatedGraph, ctx: DpContext, t: int) -> CvcTable:
    if ctx.dec.children[t]:
        raise ValueError(f"node {t} is not a leaf")
    return cvc_node_table_exhaustive(cg, ctx, t)


# ---------------------------------------------------------------------------
# reduced join


@dataclass
class ReducedCvc:
    """Edgeless X_t, no A-children, adhesion 0; only B-type children below."""

    x_order: tuple
    capacity: dict  # x -> capacity
    children: list = field(default_factory=list)  # CvcTable per child (k_edges go to X only)


def _columns(table: CvcTable, x_order) -> dict:
    """degree vector of uncovered-by-child edges -> min beta."""
    idx = {x: i for i, x in enumerate(x_order)}
    cols: dict = {}
    for sub, b in table.beta.items():
        vec = [0] * len(x_order)
        for e in table.k_edges:
            if e in sub:
                continue
            for v in e:
                if v in idx:
                    vec[idx[v]] += 1
        vec = tuple(vec)
        if b < cols.get(vec, INF) or vec not in cols:
            cols[vec] = b
    return cols


def cvc_reduced_join(inst: ReducedCvc) -> float:
    xs = inst.x_order
    base = 0
    classes: dict = {}
    for tab in inst.children:
        if tab.a == INF:
            return INF
        base += tab.a
        cols = _columns(tab, xs)
        sig = tuple(sorted(cols.items(), key=lambda kv: (kv[0], kv[1])))
        classes.setdefault(sig, [cols, 0])
        classes[sig][1] += 1
    class_list = list(classes.values())
    max_beta = max(
        [b for cols, _ in class_list for b in cols.values() if b < INF] + [0]
    )
    big = 1 + sum(cnt for _, cnt in class_list) * (max_beta + 1) + len(xs)

    var_cols = []
    variables = []
    objective = []
    for ci, (cols, cnt) in enumerate(class_list):
        for vec, b in sorted(cols.items()):
            var_cols.append((ci, vec))
            variables.append((f"z{ci}_{len(variables)}", 0, cnt))
            objective.append(big if b == INF else int(b))
    class_rows = []
    for ci, (_, cnt) in enumerate(class_list):
        row = tuple(1 if vc[0] == ci else 0 for vc in var_cols)
        class_rows.append((row, "=", cnt))

    best = INF
    for r in range(len(xs) + 1):
        for xprime in itertools.combinations(xs, r):
            xset = set(xprime)
            cons = list(class_rows)
            for i, x in enumerate(xs):
                cap = inst.capacity[x] if x in xset else 0
                row = tuple(vc[1][i] for vc in var_cols)
                if any(row):
                    cons.append((row, "<=", cap))
            res = solve_min(IlpInstance(tuple(variables), tuple(cons), tuple(objective), big))
            if res is None or res[1] >= big:
                continue
            best = min(best, res[1] + r)
    return base + best if best < INF else INF


def pendant_table(x: int, u) -> CvcTable:
    """Child consisting of one capacity-0 vertex u hanging at x: x must cover the edge."""
    e = (x, u)
    return CvcTable(0, {frozenset(): 0, frozenset([e]): INF}, (e,))


# ---------------------------------------------------------------------------
# join


def cvc_join(cg: CapacitatedGraph, ctx: DpContext, t: int, tables: dict) -> CvcTable:
    g = cg.graph
    cap = cg.capacity
    X = ctx.bag(t)
    xs = tuple(sorted(X))
    A = ctx.a_children(t)
    B = ctx.b_children(t)
    for c in A + B:
        if c not in tables:
            raise ValueError(f"missing table for child {c} of node {t}")
    y = ctx.y(t)
    owner = {}
    for p in A:
        for v in ctx.y(p):
            owner[v] = p
    for x in X:
        owner[x] = "X"
    k_t = ctx.k_edges(t)
    # edges the join has to assign: inside X, X to A-children, between A-children, and K_t
    F = []
    for e in sorted(g.edges):
        u, v = e
        if u in y and v in y:
            ou, ov = owner.get(u), owner.get(v)
            if ou is None or ov is None:
                continue  # touches a B-child: handled by the reduced join
            if ou == ov and ou != "X":
                continue  # inside one A-child
            F.append(e)
    F.extend(k_t)
    a_sets = {p: set(ctx.k_edges(p)) for p in A}
    k_set = set(k_t)

    base_children = [tables[c] for c in B]
    rj_cache: dict = {}

    def reduced(residual: tuple, forced: frozenset) -> float:
        key = (residual, forced)
        if key not in rj_cache:
            kids = list(base_children)
            capd = dict(zip(xs, residual))
            for i, x in enumerate(sorted(forced)):
                kids.append(pendant_table(x, ("pendant", i)))
                capd[x] += 1
            rj_cache[key] = cvc_reduced_join(ReducedCvc(xs, capd, kids))
        return rj_cache[key]

    costs = {frozenset(s): INF for s in _subsets(k_t)}
    load = dict.fromkeys(xs, 0)
    u_sets = {p: [] for p in A}
    inside_k = []

    def rec(i):
        if i == len(F):
            acost = 0
            for p in A:
                acost += tables[p].a + tables[p].beta[frozenset(u_sets[p])]
                if acost == INF:
                    return
            residual = tuple(cap[x] - load[x] for x in xs)
            forced = frozenset(x for x in xs if load[x] > 0)
            val = acost + reduced(residual, forced)
            key = frozenset(inside_k)
            if val < costs[key]:
                costs[key] = val
            return
        e = F[i]
        for end in e:
            other = e[1] if end == e[0] else e[0]
            if end not in y:
                # K_t edge mapped outside: the edge is simply not part of H
                rec(i + 1)
                continue
            o = owner[end]
            if o == "X":
                if load[end] >= cap[end]:
                    continue
                load[end] += 1
            pushed = []
            for p in A:
                if e in a_sets[p] and end in ctx.y(p):
                    u_sets[p].append(e)
                    pushed.append(p)
            if e in k_set:
                inside_k.append(e)
            rec(i + 1)
            if e in k_set:
                inside_k.pop()
            for p in pushed:
                u_sets[p].pop()
            if o == "X":
                load[end] -= 1

    rec(0)
    return _table_from_costs(costs, k_t)


def cvc_tables(cg: CapacitatedGraph, ctx: DpContext) -> dict:
    tables = {}
    for t in ctx.dec.postorder():
        if ctx.dec.children[t]:
            tables[t] = cvc_join(cg, ctx, t, tables)
        else:
            tables[t] = cvc_leaf_table(cg, ctx, t)
    return tables


def solve_cvc(cg: CapacitatedGraph, dec, d=None):
    """Return (a_r <= d, a_r); the first entry is None when no budget is given."""
    ctx = prepare(cg.graph, dec)
    tables = cvc_tables(cg, ctx)
    opt = tables[ctx.dec.root].a
    return (None if d is None else opt <= d), opt
