"""Nice tree-cut decompositions: rerouting, contraction, A/B child split, treewidth export."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from treecut.decomposition import TreeCutDecomposition, metrics, validate, y_sets
from treecut.graph import Graph

log = logging.getLogger(__name__)


def _adhesions(g: Graph, dec: TreeCutDecomposition, ys) -> list:
    return [0 if t == dec.root else g.cut_size(ys[t]) for t in dec.nodes]


def _is_bad(g, dec, ys, adh, t) -> bool:
    if t == dec.root or adh[t] > 2:
        return False
    nb = g.neighborhood(ys[t])
    return any(nb & ys[s] for s in dec.children[dec.parent[t]] if s != t)


def is_nice(g: Graph, dec: TreeCutDecomposition) -> bool:
    ys = y_sets(dec)
    adh = _adhesions(g, dec, ys)
    return not any(_is_bad(g, dec, ys, adh, t) for t in dec.nodes)


def bad_nodes(g: Graph, dec: TreeCutDecomposition) -> list:
    ys = y_sets(dec)
    adh = _adhesions(g, dec, ys)
    return [t for t in dec.nodes if _is_bad(g, dec, ys, adh, t)]


def bad_neighbors(g: Graph, dec: TreeCutDecomposition, t: int, ys=None) -> list:
    """Siblings of t, or descendants of siblings, whose bag meets N(Y_t)."""
    ys = ys if ys is not None else y_sets(dec)
    nb = g.neighborhood(ys[t])
    out = []
    for s in dec.children[dec.parent[t]]:
        if s == t:
            continue
        out.extend(b for b in dec.subtree_nodes(s) if nb & dec.bags[b])
    return sorted(out)


def reroute(g: Graph, dec: TreeCutDecomposition, t: int) -> TreeCutDecomposition:
    """Move the bad node t below its deepest bad neighbour (smallest id on ties)."""
    ys = y_sets(dec)
    adh = _adhesions(g, dec, ys)
    if not _is_bad(g, dec, ys, adh, t):
        raise ValueError(f"node {t} is not bad")
    b = _deepest(dec, bad_neighbors(g, dec, t, ys))
    parent = list(dec.parent)
    parent[t] = b
    return dec.with_parent(parent)


def _deepest(dec, nodes):
    depth = dec.depth
    return min(nodes, key=lambda b: (-depth[b], b))


@dataclass
class RerouteTrace:
    decomposition: TreeCutDecomposition
    steps: int = 0
    moves: list = field(default_factory=list)  # (t, new parent) per step


def top_down_reroute(g: Graph, dec: TreeCutDecomposition) -> RerouteTrace:
    """Reroute a minimum-depth bad node until none is left.

    Keeps a log of (t, b) pairs resolved by moving t below b and checks that b
    never again shows up as a bad neighbour of a bad t.
    """
    trace = RerouteTrace(dec)
    resolved: set = set()
    limit = 2 * dec.size
    while True:
        cur = trace.decomposition
        ys = y_sets(cur)
        adh = _adhesions(g, cur, ys)
        bad = [t for t in cur.nodes if _is_bad(g, cur, ys, adh, t)]
        if not bad:
            return trace
        for t in bad:
            for b in bad_neighbors(g, cur, t, ys):
                if (t, b) in resolved:
                    raise AssertionError(f"bad pair ({t},{b}) reappeared after rerouting")
        depth = cur.depth
        t = min(bad, key=lambda s: (depth[s], s))
        b = _deepest(cur, bad_neighbors(g, cur, t, ys))
        parent = list(cur.parent)
        parent[t] = b
        trace.decomposition = cur.with_parent(parent)
        trace.steps += 1
        trace.moves.append((t, b))
        resolved.add((t, b))
        if trace.steps > limit:
            raise AssertionError("rerouting exceeded 2|T| steps")


def contract_empty(dec: TreeCutDecomposition) -> TreeCutDecomposition:
    """Delete empty leaves and splice out empty nodes with a single child."""
    parent = dict(enumerate(dec.parent))
    bags = dict(enumerate(dec.bags))
    root = dec.root
    changed = True
    while changed:
        changed = False
        children: dict = {t: [] for t in parent}
        for t, p in parent.items():
            if t != root:
                children[p].append(t)
        for t in sorted(parent):
            if bags[t] or t not in parent:
                continue
            ch = children[t]
            if not ch and t != root:
                del parent[t]
                changed = True
                break
            if len(ch) == 1:
                (c,) = ch
                if t == root:
                    parent[c] = c
                    root = c
                else:
                    parent[c] = parent[t]
                del parent[t]
                changed = True
                break
    keep = sorted(parent)
    new_id = {t: i for i, t in enumerate(keep)}
    return TreeCutDecomposition(
        tuple(new_id[parent[t]] for t in keep), tuple(bags[t] for t in keep), new_id[root]
    )


def nicify(g: Graph, dec: TreeCutDecomposition, trace: RerouteTrace | None = None) -> TreeCutDecomposition:
    rep = validate(g, dec)
    if not rep:
        raise ValueError(f"invalid decomposition: {rep.message}")
    d1 = contract_empty(dec)
    tr = top_down_reroute(g, d1)
    if not is_nice(g, tr.decomposition):
        raise AssertionError("rerouting finished with a bad node left")
    out = contract_empty(tr.decomposition)
    if not is_nice(g, out):
        raise AssertionError("contraction broke niceness")
    if trace is not None:
        trace.decomposition, trace.steps, trace.moves = out, tr.steps, tr.moves
    log.debug("nicify: %d -> %d nodes, %d reroutes", dec.size, out.size, tr.steps)
    return out


@dataclass(frozen=True)
class ChildPartition:
    a_set: frozenset
    b_set: frozenset


def _partition(g: Graph, dec: TreeCutDecomposition, met, t: int) -> ChildPartition:
    a, b = set(), set()
    for c in dec.children[t]:
        if met.adhesion[c] <= 2 and g.neighborhood(met.y_set[c]) <= dec.bags[t]:
            b.add(c)
        else:
            a.add(c)
    return ChildPartition(frozenset(a), frozenset(b))


def partition_children(g: Graph, dec: TreeCutDecomposition, t: int, met=None) -> ChildPartition:
    if not is_nice(g, dec):
        raise ValueError("decomposition is not nice")
    met = met or metrics(g, dec)
    part = _partition(g, dec, met, t)
    k = met.width
    assert len(part.a_set) <= 2 * k + 1, (t, len(part.a_set), k)
    return part


def all_partitions(g: Graph, dec: TreeCutDecomposition, met=None) -> list:
    if not is_nice(g, dec):
        raise ValueError("decomposition is not nice")
    met = met or metrics(g, dec)
    k = met.width
    parts = [_partition(g, dec, met, t) for t in dec.nodes]
    for t, p in enumerate(parts):
        assert len(p.a_set) <= 2 * k + 1, (t, len(p.a_set), k)
    return parts


# ---------------------------------------------------------------------------
# tree-decomposition export


@dataclass(frozen=True)
class TreeDecomposition:
    parent: tuple
    bags: tuple
    root: int = 0

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1


def validate_tree_decomposition(g: Graph, td: TreeDecomposition):
    """Return None if valid, else a message naming the first violated axiom."""
    m = len(td.parent)
    adj = {t: set() for t in range(m)}
    for t, p in enumerate(td.parent):
        if t != td.root:
            adj[t].add(p)
            adj[p].add(t)
    for v in range(g.n):
        occ = {t for t in range(m) if v in td.bags[t]}
        if not occ:
            return f"vertex {v} occurs in no bag"
        start = next(iter(occ))
        seen, stack = {start}, [start]
        while stack:
            s = stack.pop()
            for u in adj[s]:
                if u in occ and u not in seen:
                    seen.add(u)
                    stack.append(u)
        if seen != occ:
            return f"bags containing vertex {v} are not connected"
    for u, v in sorted(g.edges):
        if not any(u in b and v in b for b in td.bags):
            return f"edge ({u},{v}) not covered"
    return None


def to_tree_decomposition(g: Graph, dec: TreeCutDecomposition) -> TreeDecomposition:
    if not is_nice(g, dec):
        raise ValueError("decomposition is not nice")
    met = metrics(g, dec)
    parts = [_partition(g, dec, met, t) for t in dec.nodes]
    b_thin = set()
    for p in parts:
        b_thin |= p.b_set
    node_of = dec.node_of()
    depth = dec.depth
    bags = [set() for _ in dec.nodes]
    for v in range(g.n):
        tv = node_of[v]
        marks = {node_of[u] for u in g.neighbors(v)} | {tv}
        # minimal subtree spanning the marked nodes: climb to the common ancestor
        sub = set()
        frontier = set(marks)
        while len(frontier) > 1:
            deepest = max(frontier, key=lambda s: (depth[s], s))
            frontier.discard(deepest)
            sub.add(deepest)
            frontier.add(dec.parent[deepest])
        top = frontier.pop()
        sub.add(top)
        # walk from top of T(v) down to t(v); keep the lowest B-thin node
        path = []
        s = tv
        while True:
            path.append(s)
            if s == top:
                break
            s = dec.parent[s]
        star = top
        for s in reversed(path):
            if s in b_thin:
                star = s
        for s in sub:
            if dec.is_ancestor(star, s):
                bags[s].add(v)
    td = TreeDecomposition(dec.parent, tuple(frozenset(b) for b in bags), dec.root)
    k = met.width
    assert all(len(b) <= 2 * k * k + 3 * k + 1 for b in td.bags)
    return td
