"""Rooted tree-cut decompositions, validation and width metrics."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from treecut.graph import Graph, MultiGraph, consolidate, three_center


@dataclass(frozen=True)
class TreeCutDecomposition:
    """Rooted tree on nodes 0..m-1 with one (possibly empty) bag per node.

    ``parent[root] == root``.  Bags are stored as frozensets.
    """

    parent: tuple
    bags: tuple
    root: int = 0

    def __post_init__(self):
        object.__setattr__(self, "parent", tuple(self.parent))
        object.__setattr__(self, "bags", tuple(frozenset(b) for b in self.bags))
        if len(self.parent) != len(self.bags):
            raise ValueError("parent and bags must have the same length")

    @classmethod
    def single(cls, n: int) -> "TreeCutDecomposition":
        return cls((0,), (frozenset(range(n)),), 0)

    @property
    def size(self) -> int:
        return len(self.parent)

    @property
    def nodes(self) -> range:
        return range(len(self.parent))

    @cached_property
    def children(self) -> tuple:
        ch = [[] for _ in self.parent]
        for t, p in enumerate(self.parent):
            if t != self.root:
                ch[p].append(t)
        return tuple(tuple(c) for c in ch)

    @cached_property
    def depth(self) -> tuple:
        d = [0] * self.size
        for t in self.preorder():
            if t != self.root:
                d[t] = d[self.parent[t]] + 1
        return tuple(d)

    def preorder(self) -> list:
        out, stack = [], [self.root]
        while stack:
            t = stack.pop()
            out.append(t)
            stack.extend(reversed(self.children[t]))
        return out

    def postorder(self) -> list:
        return self.preorder()[::-1]

    def subtree_nodes(self, t: int) -> list:
        out, stack = [], [t]
        while stack:
            s = stack.pop()
            out.append(s)
            stack.extend(self.children[s])
        return out

    def is_ancestor(self, a: int, t: int) -> bool:
        """True if a is t or an ancestor of t."""
        while True:
            if t == a:
                return True
            if t == self.root:
                return False
            t = self.parent[t]

    def node_of(self) -> dict:
        """Vertex -> node whose bag holds it."""
        return {v: t for t, b in enumerate(self.bags) for v in b}

    def with_parent(self, parent) -> "TreeCutDecomposition":
        return TreeCutDecomposition(tuple(parent), self.bags, self.root)


@dataclass
class ValidationReport:
    ok: bool
    message: str = "ok"

    def __bool__(self):
        return self.ok


def validate(g: Graph, dec: TreeCutDecomposition) -> ValidationReport:
    m = dec.size
    if m == 0:
        return ValidationReport(False, "not a tree: no nodes")
    if not 0 <= dec.root < m:
        return ValidationReport(False, f"not a tree: root {dec.root} out of range")
    if dec.parent[dec.root] != dec.root:
        return ValidationReport(False, "not a tree: root must be its own parent")
    for t, p in enumerate(dec.parent):
        if not 0 <= p < m:
            return ValidationReport(False, f"not a tree: node {t} has unknown parent {p}")
        if p == t and t != dec.root:
            return ValidationReport(False, f"not a tree: node {t} is its own parent")
    # every node must reach the root without revisiting
    for t in range(m):
        seen = set()
        s = t
        while s != dec.root:
            if s in seen:
                return ValidationReport(False, f"not a tree: parent cycle through node {t}")
            seen.add(s)
            s = dec.parent[s]
    seen_v: dict = {}
    for t, bag in enumerate(dec.bags):
        for v in bag:
            if not (isinstance(v, int) and 0 <= v < g.n):
                return ValidationReport(False, f"unknown vertex {v} in bag of node {t}")
            if v in seen_v:
                return ValidationReport(
                    False, f"near-partition violated: vertex {v} in nodes {seen_v[v]} and {t}"
                )
            seen_v[v] = t
    if len(seen_v) != g.n:
        missing = min(set(range(g.n)) - set(seen_v))
        return ValidationReport(False, f"near-partition violated: vertex {missing} in no bag")
    return ValidationReport(True)


@dataclass
class NodeMetrics:
    """Per-node derived data.  Treat as read-only once built."""

    adhesion: list
    torso_size: list
    y_set: list
    boundary: list
    adh_v: dict = field(default_factory=dict)  # (node, vertex) -> |N(v) \ Y_t|

    @property
    def width(self) -> int:
        return max(max(a, b) for a, b in zip(self.adhesion, self.torso_size))

    def is_thin(self, t: int) -> bool:
        return self.adhesion[t] <= 2


def y_sets(dec: TreeCutDecomposition) -> list:
    ys = [None] * dec.size
    for t in dec.postorder():
        y = set(dec.bags[t])
        for c in dec.children[t]:
            y |= ys[c]
        ys[t] = frozenset(y)
    return ys


def _components(dec: TreeCutDecomposition, t: int, ys) -> list:
    """Vertex sets of the components of T - t: upward component first, then children by id."""
    comps = []
    if t != dec.root:
        comps.append(ys[dec.root] - ys[t])
    for c in sorted(dec.children[t]):
        comps.append(ys[c])
    return comps


def _torso_from(g: Graph, dec: TreeCutDecomposition, t: int, ys) -> MultiGraph:
    h = g.to_multigraph()
    fresh = g.n
    for comp in _components(dec, t, ys):
        if comp:
            h = consolidate(h, comp, fresh)
        else:
            # a component whose bags are all empty still becomes a (isolated) vertex
            h = MultiGraph(h.vertices | {fresh}, h.mult)
        fresh += 1
    return h


def torso(g: Graph, dec: TreeCutDecomposition, t: int) -> MultiGraph:
    return _torso_from(g, dec, t, y_sets(dec))


def metrics(g: Graph, dec: TreeCutDecomposition) -> NodeMetrics:
    rep = validate(g, dec)
    if not rep:
        raise ValueError(f"invalid decomposition: {rep.message}")
    ys = y_sets(dec)
    adhesion, tor, bnd = [], [], []
    adh_v = {}
    for t in dec.nodes:
        y = ys[t]
        b = g.boundary(y) if t != dec.root else frozenset()
        for v in b:
            adh_v[(t, v)] = len(g.neighbors(v) - y)
        bnd.append(b)
        adhesion.append(0 if t == dec.root else g.cut_size(y))
        h = _torso_from(g, dec, t, ys)
        tor.append(len(three_center(h, dec.bags[t])))
    return NodeMetrics(adhesion, tor, ys, bnd, adh_v)


def width(g: Graph, dec: TreeCutDecomposition) -> int:
    return metrics(g, dec).width


def reroot(dec: TreeCutDecomposition, new_root: int) -> TreeCutDecomposition:
    parent = list(dec.parent)
    path = []
    s = new_root
    while s != dec.root:
        path.append(s)
        s = dec.parent[s]
    path.append(dec.root)
    for child, par in zip(path[1:], path[:-1]):
        parent[child] = par
    parent[new_root] = new_root
    return TreeCutDecomposition(tuple(parent), dec.bags, new_root)
