"""Imbalance by dynamic programming over a nice tree-cut decomposition.

For an order R of Y_t, s(v) is (#later neighbours - #earlier neighbours) of v
counted inside G[Y_t].  An extract of t is a pair (f, tau): f orders the
boundary vertices and tau(v) is s(v) when |s(v)| <= adh_t(v), otherwise the
saturated value +inf / -inf.  Values past the saturation point cannot be
pulled back to zero by the at most adh_t(v) outside neighbours, which is what
makes the saturated representation exact.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field

from treecut.dp import DpContext, prepare
from treecut.graph import Graph
from treecut.ilp import IlpInstance, solve_min

log = logging.getLogger(__name__)
INF = math.inf
POS, NEG = math.inf, -math.inf


def imbalance_of_order(g: Graph, R) -> int:
    R = list(R)
    if sorted(R) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(R)}
    bal = [0] * g.n
    for u, v in g.edges:
        if pos[u] < pos[v]:
            bal[u] += 1
            bal[v] -= 1
        else:
            bal[u] -= 1
            bal[v] += 1
    return sum(abs(b) for b in bal)


def saturate(s, adh: int):
    if s == POS or s > adh:
        return POS
    if s == NEG or s < -adh:
        return NEG
    return s


def tau_range(adh: int) -> list:
    return [NEG] + list(range(-adh, adh + 1)) + [POS]


def adjust(tau, delta: int):
    """Change of |s| when delta is added to a value summarised by tau."""
    if tau == POS:
        return delta
    if tau == NEG:
        return -delta
    return abs(tau + delta) - abs(tau)


def shifted(tau, delta: int):
    if tau in (POS, NEG):
        return tau
    return tau + delta


@dataclass
class ImbTable:
    a: float
    beta: dict  # (f, tau) -> finite value; everything else is INF
    boundary: tuple = ()  # sorted boundary vertices, tau is aligned with it
    adh: dict = field(default_factory=dict)

    def value(self, alpha) -> float:
        return self.beta.get(alpha, INF)


def all_extracts(ctx: DpContext, t: int):
    bd = tuple(sorted(ctx.boundary(t)))
    ranges = [tau_range(ctx.adh_v(t, v)) for v in bd]
    for f in itertools.permutations(bd):
        for tau in itertools.product(*ranges):
            yield (f, tau)


def _finish(costs: dict, ctx: DpContext, t: int, cutoff: bool) -> ImbTable:
    bd = tuple(sorted(ctx.boundary(t)))
    adh = {v: ctx.adh_v(t, v) for v in bd}
    if not costs:
        raise AssertionError(f"node {t}: no extract realised")
    a = min(costs.values())
    cap = 4 * ctx.met.adhesion[t]
    beta = {}
    for alpha, c in costs.items():
        if not cutoff or c - a <= cap:
            beta[alpha] = c - a
    return ImbTable(a, beta, bd, adh)


def _extract_of_order(g: Graph, R, bd, adh, ys):
    pos = {v: i for i, v in enumerate(R)}
    s = dict.fromkeys(R, 0)
    for v in R:
        for u in g.neighbors(v):
            if u in ys:
                s[v] += 1 if pos[u] > pos[v] else -1
    f = tuple(sorted(bd, key=pos.__getitem__))
    tau = tuple(saturate(s[v], adh[v]) for v in bd)
    return (f, tau), sum(abs(x) for x in s.values())


def extract_costs_exhaustive(g: Graph, ctx: DpContext, t: int) -> dict:
    """c(alpha) for every realisable extract, by trying every order of Y_t."""
    ys = ctx.y(t)
    bd = tuple(sorted(ctx.boundary(t)))
    adh = {v: ctx.adh_v(t, v) for v in bd}
    costs: dict = {}
    for R in itertools.permutations(sorted(ys)):
        alpha, c = _extract_of_order(g, R, bd, adh, ys)
        if c < costs.get(alpha, INF):
            costs[alpha] = c
    return costs


def extract_realized_cost(g: Graph, ctx: DpContext, t: int, alpha) -> float:
    return extract_costs_exhaustive(g, ctx, t).get(tuple(alpha), INF)


def imb_leaf_table(g: Graph, ctx: DpContext, t: int, cutoff: bool = True) -> ImbTable:
    if ctx.dec.children[t]:
        raise ValueError(f"node {t} is not a leaf")
    return _finish(extract_costs_exhaustive(g, ctx, t), ctx, t, cutoff)


def imb_node_table_exhaustive(g: Graph, ctx: DpContext, t: int, cutoff: bool = True) -> ImbTable:
    return _finish(extract_costs_exhaustive(g, ctx, t), ctx, t, cutoff)


# ---------------------------------------------------------------------------
# reduced join


@dataclass
class ReducedImb:
    """X_t edgeless inside the instance, only B-type children (adhesion <= 2, neighbours in X_t)."""

    order: tuple  # f restricted to X_t
    omega: dict  # x -> contribution of the already-fixed part of Y_t
    zeta: dict  # x -> exact int, POS or NEG, constraining s(x) = omega(x) + B-part
    adh: dict  # x -> adh_t(x) for the zeta-constrained vertices
    children: list = field(default_factory=list)  # (ImbTable, {y: tuple of X-neighbours})


def _child_columns(tab: ImbTable, nbrs: dict, order: tuple) -> dict:
    """Coefficient vector on X (in ``order``) -> cheapest placement cost."""
    idx = {x: i for i, x in enumerate(order)}
    p = len(order)
    bd = tab.boundary
    by_f: dict = {}
    for (f, tau), b in tab.beta.items():
        by_f.setdefault(f, []).append((tau, b))
    cols: dict = {}
    for f, entries in by_f.items():
        # interval positions: y placed in gap i sits before order[i] and after order[i-1]
        for gaps in itertools.combinations_with_replacement(range(p + 1), len(f)):
            gap = dict(zip(f, gaps))
            vec = [0] * p
            delta = {}
            for y in bd:
                d = 0
                for x in nbrs.get(y, ()):
                    if idx[x] >= gap[y]:  # x after y
                        d += 1
                        vec[idx[x]] -= 1
                    else:
                        d -= 1
                        vec[idx[x]] += 1
                delta[y] = d
            best = INF
            for tau, b in entries:
                c = b + sum(adjust(tv, delta[y]) for y, tv in zip(bd, tau))
                if c < best:
                    best = c
            vec = tuple(vec)
            if best < cols.get(vec, INF):
                cols[vec] = best
    return cols


def imb_reduced_join(inst: ReducedImb) -> float:
    order = inst.order
    p = len(order)
    base = 0
    classes: dict = {}
    for tab, nbrs in inst.children:
        base += tab.a
        if not tab.boundary:
            continue
        cols = _child_columns(tab, nbrs, order)
        if not cols:
            return INF
        sig = frozenset(cols.items())
        classes.setdefault(sig, [cols, 0])
        classes[sig][1] += 1
    var_cols = []
    variables = []
    costs = []
    class_rows = []
    for ci, (cols, cnt) in enumerate(classes.values()):
        start = len(var_cols)
        for vec, c in sorted(cols.items()):
            var_cols.append(vec)
            variables.append((f"g{ci}_{len(variables)}", 0, cnt))
            costs.append(int(c))
        class_rows.append((start, len(var_cols), cnt))
    nv = len(variables)
    rows = []
    for start, end, cnt in class_rows:
        rows.append((tuple(1 if start <= i < end else 0 for i in range(nv)), "=", cnt))
    coef = [tuple(var_cols[i][j] for i in range(nv)) for j in range(p)]
    for j, x in enumerate(order):
        if x not in inst.zeta:
            continue
        z, w, a = inst.zeta[x], inst.omega[x], inst.adh[x]
        if z == POS:
            rows.append((coef[j], ">=", a + 1 - w))
        elif z == NEG:
            rows.append((coef[j], "<=", -a - 1 - w))
        else:
            rows.append((coef[j], "=", z - w))

    best = INF
    for phi in itertools.product((1, -1), repeat=p):
        ok = True
        for j, x in enumerate(order):
            z = inst.zeta.get(x)
            if z is None:
                continue
            if (z == POS or (z != NEG and z >= 0)) and phi[j] < 0:
                ok = False
            if (z == NEG or (z != POS and z < 0)) and phi[j] > 0:
                ok = False
        if not ok:
            continue
        cons = list(rows)
        for j, x in enumerate(order):
            w = inst.omega[x]
            if phi[j] > 0:
                cons.append((coef[j], ">=", -w))
            else:
                cons.append((coef[j], "<=", -w - 1))
        obj = tuple(costs[i] + sum(phi[j] * coef[j][i] for j in range(p)) for i in range(nv))
        const = sum(phi[j] * inst.omega[x] for j, x in enumerate(order))
        res = solve_min(IlpInstance(tuple(variables), tuple(cons), obj))
        if res is not None:
            best = min(best, res[1] + const)
    return base + best if best < INF else INF


# ---------------------------------------------------------------------------
# join


def _orders_by_relation(Z: list, pairs: set):
    """One linear order per distinct orientation of ``pairs`` (all acyclic ones).

    Depth-first over prefixes; two prefixes with the same placed set and the
    same orientation among placed vertices have the same completions, so the
    second one is skipped.
    """
    nbr = {v: {u for u in Z if (u, v) in pairs or (v, u) in pairs} for v in Z}
    seen = set()
    out = []
    seq = []

    def rec(placed: frozenset, orient: frozenset):
        if len(placed) == len(Z):
            out.append(tuple(seq))
            return
        for v in Z:
            if v in placed:
                continue
            new = orient | {(u, v) for u in nbr[v] if u in placed}
            key = (placed | {v}, new)
            if key in seen:
                continue
            seen.add(key)
            seq.append(v)
            rec(placed | {v}, frozenset(new))
            seq.pop()

    rec(frozenset(), frozenset())
    return out


def imb_join(g: Graph, ctx: DpContext, t: int, tables: dict, cutoff: bool = True) -> ImbTable:
    X = sorted(ctx.bag(t))
    A = ctx.a_children(t)
    B = ctx.b_children(t)
    ys = ctx.y(t)
    bd_t = tuple(sorted(ctx.boundary(t)))
    adh_t = {v: ctx.adh_v(t, v) for v in bd_t}
    child_of = {}
    for p in A:
        for v in ctx.y(p):
            child_of[v] = p
    a_bd = {p: tuple(sorted(ctx.boundary(p))) for p in A}
    Z = list(X) + [v for p in A for v in a_bd[p]]
    zset = set(Z)
    # pairs whose relative order matters for the summary
    pairs = set()
    for u in Z:
        for v in g.neighbors(u):
            if v in zset and u < v and (child_of.get(u) is None or child_of.get(u) != child_of.get(v)):
                pairs.add((u, v))
    groups = [tuple(X), bd_t] + [a_bd[p] for p in A]
    for grp in groups:
        for u, v in itertools.combinations(sorted(grp), 2):
            pairs.add((u, v))

    b_children = []
    for q in B:
        tab = tables[q]
        nbrs = {y: tuple(sorted(g.neighbors(y) - ctx.y(q))) for y in tab.boundary}
        b_children.append((tab, nbrs))
    x_bd = [x for x in X if x in adh_t]
    rj_cache: dict = {}

    # per A-child: extracts grouped by order
    a_by_f = {}
    for p in A:
        d: dict = {}
        for (f, tau), b in tables[p].beta.items():
            d.setdefault(f, []).append((tau, b))
        a_by_f[p] = d

    costs: dict = {}
    for j in _orders_by_relation(Z, pairs):
        pos = {v: i for i, v in enumerate(j)}
        f_t = tuple(sorted(bd_t, key=pos.__getitem__))
        f_x = tuple(sorted(X, key=pos.__getitem__))
        omega = {}
        for x in X:
            w = 0
            for u in g.neighbors(x):
                if u in zset:
                    w += 1 if pos[u] > pos[x] else -1
            omega[x] = w
        # A-children: options keyed by their saturated contribution to tau_t
        per_child = []
        feasible = True
        for p in A:
            bdp = a_bd[p]
            f_p = tuple(sorted(bdp, key=pos.__getitem__))
            delta = {}
            for v in bdp:
                d = 0
                for u in g.neighbors(v):
                    if u in ys and child_of.get(u) != p:
                        d += 1 if pos[u] > pos[v] else -1
                delta[v] = d
            opts: dict = {}
            base = tables[p].a
            for tau, b in a_by_f[p].get(f_p, ()):
                c = base + b
                proj = []
                for v, tv in zip(bdp, tau):
                    c += adjust(tv, delta[v])
                    if v in adh_t:
                        proj.append((v, saturate(shifted(tv, delta[v]), adh_t[v])))
                proj = tuple(proj)
                if c < opts.get(proj, INF):
                    opts[proj] = c
            if not opts:
                feasible = False
                break
            per_child.append(opts)
        if not feasible:
            continue
        # combine children
        combos = {(): 0}
        for opts in per_child:
            nxt = {}
            for k1, c1 in combos.items():
                for k2, c2 in opts.items():
                    k = k1 + k2
                    if c1 + c2 < nxt.get(k, INF):
                        nxt[k] = c1 + c2
            combos = nxt
        # X boundary targets
        rj_vals = {}
        for zeta_vals in itertools.product(*[tau_range(adh_t[x]) for x in x_bd]):
            zeta = dict(zip(x_bd, zeta_vals))
            key = (f_x, tuple(omega[x] for x in f_x), zeta_vals)
            if key not in rj_cache:
                rj_cache[key] = imb_reduced_join(
                    ReducedImb(f_x, omega, zeta, {x: adh_t[x] for x in x_bd}, b_children)
                )
            if rj_cache[key] < INF:
                rj_vals[zeta_vals] = rj_cache[key]
        for akey, ac in combos.items():
            tau_map = dict(akey)
            for zeta_vals, rv in rj_vals.items():
                tm = dict(tau_map)
                tm.update(zip(x_bd, zeta_vals))
                alpha = (f_t, tuple(tm[v] for v in bd_t))
                c = ac + rv
                if c < costs.get(alpha, INF):
                    costs[alpha] = c
    return _finish(costs, ctx, t, cutoff)


def imb_tables(g: Graph, ctx: DpContext, cutoff: bool = True) -> dict:
    tables = {}
    for t in ctx.dec.postorder():
        if ctx.dec.children[t]:
            tables[t] = imb_join(g, ctx, t, tables, cutoff)
        else:
            tables[t] = imb_leaf_table(g, ctx, t, cutoff)
    return tables


def solve_imb(g: Graph, dec, d=None, cutoff: bool = True):
    ctx = prepare(g, dec)
    tables = imb_tables(g, ctx, cutoff)
    opt = tables[ctx.dec.root].a
    return (None if d is None else opt <= d), opt
