"""Capacitated Dominating Set by dynamic programming over a nice tree-cut decomposition.

A snapshot of node t is stored as a tuple aligned with the sorted boundary
of Y_t: ``None`` marks a passive vertex (deleted, dominated from outside),
an integer marks an active vertex and its offset (number of outside vertices
it must still dominate, modelled by capacity-0 pendants).
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field

from treecut.dp import DpContext, prepare
from treecut.flow import domination_assignment
from treecut.graph import CapacitatedGraph
from treecut.ilp import IlpInstance, solve_min

log = logging.getLogger(__name__)
INF = math.inf


@dataclass
class CdsTable:
    a: float
    beta: dict  # snapshot -> cost - a (finite entries only)
    boundary: tuple = ()

    def cost(self, snap) -> float:
        b = self.beta.get(snap, INF)
        return self.a + b


def snapshots(ctx: DpContext, t: int):
    bd = tuple(sorted(ctx.boundary(t)))
    ranges = [[None] + list(range(ctx.adh_v(t, v) + 1)) for v in bd]
    return list(itertools.product(*ranges))


def _base_snapshot(ctx, t):
    return (None,) * len(ctx.boundary(t))


def cds_witness_feasible(cg: CapacitatedGraph, D) -> bool:
    g = cg.graph
    adj = {v: g.neighbors(v) for v in g.vertices}
    return domination_assignment(g.vertices, adj, D, cg.capacity) is not None


def cds_snapshot_cost(cg: CapacitatedGraph, ctx: DpContext, t: int, snap) -> float:
    """Exhaustive minimum over D inside Y_t for the gadget graph of the snapshot."""
    g = cg.graph
    bd = tuple(sorted(ctx.boundary(t)))
    passive = {v for v, s in zip(bd, snap) if s is None}
    verts = [v for v in sorted(ctx.y(t)) if v not in passive]
    vset = set(verts)
    adj = {v: set(g.neighbors(v)) & vset for v in verts}
    cap = {v: cg.capacity[v] for v in verts}
    all_verts = list(verts)
    for v, s in zip(bd, snap):
        for i in range(s or 0):
            aux = ("aux", v, i)
            all_verts.append(aux)
            adj[aux] = {v}
            adj[v].add(aux)
            cap[aux] = 0
    for r in range(len(verts) + 1):
        for D in itertools.combinations(verts, r):
            if domination_assignment(all_verts, adj, D, cap) is not None:
                return r
    return INF


def _table(costs: dict, ctx, t, check: bool = True) -> CdsTable:
    bd = tuple(sorted(ctx.boundary(t)))
    a = costs.get(_base_snapshot(ctx, t), INF)
    if a == INF:
        raise AssertionError(f"node {t}: base snapshot has no solution")
    beta = {s: c - a for s, c in costs.items() if c < INF}
    if check:
        adh = ctx.met.adhesion[t]
        for s, b in beta.items():
            assert b <= 2 * adh, (t, s, b, adh)
    return CdsTable(a, beta, bd)


def cds_node_table_exhaustive(cg: CapacitatedGraph, ctx: DpContext, t: int) -> CdsTable:
    costs = {s: cds_snapshot_cost(cg, ctx, t, s) for s in snapshots(ctx, t)}
    return _table(costs, ctx, t)


def cds_leaf_table(cg: CapacitatedGraph, ctx: DpContext, t: int) -> CdsTable:
    if ctx.dec.children[t]:
        raise ValueError(f"node {t} is not a leaf")
    return cds_node_table_exhaustive(cg, ctx, t)


# ---------------------------------------------------------------------------
# reduced join


@dataclass
class ReducedCds:
    """Edgeless X_t; B-type children only.

    ``s_set``: X vertices in D, with remaining capacity ``residual``.
    ``need``: X vertices outside D that must be dominated by a B-child vertex.
    Every other X vertex is neither in D nor available to dominate.
    """

    s_set: tuple
    residual: dict
    need: tuple
    children: list = field(default_factory=list)  # (CdsTable, {y: X-neighbours})


def _cds_columns(tab: CdsTable, nbrs: dict, s_index: dict, need: frozenset) -> dict:
    """(consumption vector on S, provided needers) -> cheapest snapshot cost."""
    cols: dict = {}
    bd = tab.boundary
    ns = len(s_index)
    for snap, b in tab.beta.items():
        per_vertex = []
        ok = True
        for y, s in zip(bd, snap):
            choices = []
            if s is None:
                for x in nbrs[y]:
                    if x in s_index:
                        choices.append(((x,), frozenset()))
                if not choices:
                    ok = False
                    break
            else:
                cand = [x for x in nbrs[y] if x in need]
                for r in range(min(s, len(cand)) + 1):
                    for P in itertools.combinations(cand, r):
                        choices.append(((), frozenset(P)))
            per_vertex.append(choices)
        if not ok:
            continue
        for combo in itertools.product(*per_vertex):
            vec = [0] * ns
            prov = frozenset()
            for used, P in combo:
                for x in used:
                    vec[s_index[x]] += 1
                prov |= P
            key = (tuple(vec), prov)
            if b < cols.get(key, INF):
                cols[key] = b
    return cols


def cds_reduced_join_min(inst: ReducedCds) -> float:
    s_list = list(inst.s_set)
    s_index = {x: i for i, x in enumerate(s_list)}
    need = frozenset(inst.need)
    base = 0
    classes: dict = {}
    for tab, nbrs in inst.children:
        base += tab.a
        if not tab.boundary:
            continue
        cols = _cds_columns(tab, nbrs, s_index, need)
        if not cols:
            return INF
        sig = frozenset(cols.items())
        classes.setdefault(sig, [cols, 0])
        classes[sig][1] += 1
    class_list = [(sorted(cols.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1]), kv[1])), cnt)
                  for cols, cnt in classes.values()]
    ns = len(s_list)
    residual = [inst.residual[x] for x in s_list]
    need_list = sorted(need)
    best = INF

    def ilp(remaining, used_vec, fixed_cost):
        variables, obj, col_vecs, rows = [], [], [], []
        for ci, (cols, _) in enumerate(class_list):
            if remaining[ci] == 0:
                continue
            start = len(variables)
            for (vec, _prov), c in cols:
                variables.append((f"s{ci}_{len(variables)}", 0, remaining[ci]))
                obj.append(int(c))
                col_vecs.append(vec)
            rows.append((start, len(variables), remaining[ci]))
        nv = len(variables)
        cons = []
        for start, end, cnt in rows:
            cons.append((tuple(1 if start <= i < end else 0 for i in range(nv)), "=", cnt))
        for j in range(ns):
            row = tuple(col_vecs[i][j] for i in range(nv))
            rhs = residual[j] - used_vec[j]
            if rhs < 0:
                return INF
            if any(row):
                cons.append((row, "<=", rhs))
        res = solve_min(IlpInstance(tuple(variables), tuple(cons), tuple(obj)))
        return INF if res is None else res[1] + fixed_cost

    def branch(i, remaining, picked, used_vec, fixed_cost):
        nonlocal best
        if i == len(need_list):
            val = ilp(remaining, used_vec, fixed_cost)
            best = min(best, val)
            return
        x = need_list[i]
        # already covered by a slot chosen earlier
        if any(x in prov for prov in picked):
            branch(i + 1, remaining, picked, used_vec, fixed_cost)
            return
        for ci, (cols, _) in enumerate(class_list):
            if remaining[ci] == 0:
                continue
            for (vec, prov), c in cols:
                if x not in prov:
                    continue
                rem = list(remaining)
                rem[ci] -= 1
                uv = [a + b for a, b in zip(used_vec, vec)]
                if any(u > r for u, r in zip(uv, residual)):
                    continue
                branch(i + 1, rem, picked + [prov], uv, fixed_cost + c)

    branch(0, [cnt for _, cnt in class_list], [], [0] * ns, 0)
    return base + best if best < INF else INF


def cds_reduced_join(inst: ReducedCds, d: int) -> bool:
    return cds_reduced_join_min(inst) + len(inst.s_set) <= d


# ---------------------------------------------------------------------------
# join


def cds_join(cg: CapacitatedGraph, ctx: DpContext, t: int, tables: dict) -> CdsTable:
    g = cg.graph
    cap = cg.capacity
    X = sorted(ctx.bag(t))
    A = ctx.a_children(t)
    B = ctx.b_children(t)
    for c in A + B:
        if c not in tables:
            raise ValueError(f"missing table for child {c} of node {t}")
    ys = ctx.y(t)
    bd_t = tuple(sorted(ctx.boundary(t)))
    child_of = {}
    for p in A:
        for v in ctx.y(p):
            child_of[v] = p
    a_bd = {p: tables[p].boundary for p in A}
    b_children = []
    for q in B:
        tab = tables[q]
        nbrs = {y: tuple(sorted(g.neighbors(y) - ctx.y(q))) for y in tab.boundary}
        b_children.append((tab, nbrs))
    rj_cache: dict = {}

    def reduced(S, residual, need):
        key = (S, residual, need)
        if key not in rj_cache:
            rj_cache[key] = cds_reduced_join_min(
                ReducedCds(S, dict(zip(S, residual)), need, b_children)
            )
        return rj_cache[key]

    costs = {}
    for snap in snapshots(ctx, t):
        state = dict(zip(bd_t, snap))
        passive = {v for v, s in state.items() if s is None}
        off = {v: s for v, s in state.items() if s is not None}
        best = INF
        # options for each A-child under this snapshot
        a_opts = []
        for p in A:
            opts = []
            for sp, b in tables[p].beta.items():
                ok = True
                spare = {}
                needers = []
                for v, s in zip(a_bd[p], sp):
                    o_t = off.get(v, 0)
                    if v in passive:
                        if s is not None:
                            ok = False
                            break
                    elif s is None:
                        if o_t > 0:
                            ok = False
                            break
                        needers.append(v)
                    else:
                        if s < o_t:
                            ok = False
                            break
                        if s > o_t:
                            spare[v] = s - o_t
                if ok:
                    opts.append((tables[p].a + b, spare, needers))
            if not opts:
                break
            a_opts.append(opts)
        else:
            free_x = [x for x in X if x not in passive]
            for r in range(len(free_x) + 1):
                for S in itertools.combinations(free_x, r):
                    sset = set(S)
                    if any(x in off and x not in sset and off[x] > 0 for x in X):
                        continue
                    capS = {x: cap[x] - off.get(x, 0) for x in S}
                    if any(c < 0 for c in capS.values()):
                        continue
                    M = [x for x in free_x if x not in sset]
                    for combo in itertools.product(*a_opts):
                        acost = sum(o[0] for o in combo)
                        if r + acost >= best:
                            continue
                        spare = {}
                        a_need = []
                        for o in combo:
                            spare.update(o[1])
                            a_need.extend(o[2])
                        val = _assign(g, child_of, S, capS, M, a_need, spare, reduced)
                        if r + acost + val < best:
                            best = r + acost + val
        costs[snap] = best
    return _table(costs, ctx, t)


def _assign(g, child_of, S, capS, M, a_need, spare, reduced) -> float:
    """Cheapest way to dominate the needers; returns reduced-join cost or INF."""
    needers = [(x, True) for x in M] + [(v, False) for v in a_need]
    capS = dict(capS)
    spare = dict(spare)
    best = INF
    b_need = []

    def rec(i):
        nonlocal best
        if i == len(needers):
            residual = tuple(capS[x] for x in S)
            val = reduced(tuple(S), residual, tuple(sorted(b_need)))
            best = min(best, val)
            return
        w, in_x = needers[i]
        home = child_of.get(w)
        for u in sorted(g.neighbors(w)):
            if u in capS:
                if capS[u] > 0:
                    capS[u] -= 1
                    rec(i + 1)
                    capS[u] += 1
            elif spare.get(u, 0) > 0 and (in_x or child_of.get(u) != home):
                spare[u] -= 1
                rec(i + 1)
                spare[u] += 1
        if in_x:
            b_need.append(w)
            rec(i + 1)
            b_need.pop()

    rec(0)
    return best


def cds_tables(cg: CapacitatedGraph, ctx: DpContext) -> dict:
    tables = {}
    for t in ctx.dec.postorder():
        if ctx.dec.children[t]:
            tables[t] = cds_join(cg, ctx, t, tables)
        else:
            tables[t] = cds_leaf_table(cg, ctx, t)
    return tables


def solve_cds(cg: CapacitatedGraph, dec, d=None):
    ctx = prepare(cg.graph, dec, empty_root=True)
    tables = cds_tables(cg, ctx)
    opt = tables[ctx.dec.root].a
    return (None if d is None else opt <= d), opt
