"""Immutable graph types plus the consolidation / suppression primitives used for torsos."""

from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = set()
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise ValueError(f"loop at {u} not allowed in a simple graph")
            norm.add(_pair(u, v))
        object.__setattr__(self, "edges", frozenset(norm))
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        edges = list(edges)
        if len({_pair(u, v) for u, v in edges}) != len(edges):
            raise ValueError("duplicate edge")
        return cls(n, frozenset(edges))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def neighborhood(self, X: Iterable[int]) -> frozenset:
        """Open neighbourhood N(X) = (union of N(x)) minus X."""
        X = set(X)
        out = set()
        for x in X:
            out |= self._adj[x]
        return frozenset(out - X)

    def boundary(self, X: Iterable[int]) -> frozenset:
        """Vertices of X with a neighbour outside X."""
        X = set(X)
        return frozenset(x for x in X if self._adj[x] - X)

    def cut_size(self, X: Iterable[int]) -> int:
        X = set(X)
        return sum(len(self._adj[x] - X) for x in X)

    def edges_within(self, X: Iterable[int]) -> list[tuple[int, int]]:
        X = set(X)
        return sorted(e for e in self.edges if e[0] in X and e[1] in X)

    def relabel(self, perm) -> "Graph":
        return Graph(self.n, frozenset(_pair(perm[u], perm[v]) for u, v in self.edges))

    def to_multigraph(self) -> "MultiGraph":
        return MultiGraph(frozenset(range(self.n)), {e: 1 for e in self.edges})


@dataclass(frozen=True, eq=False)
class MultiGraph:
    """Multigraph with loops. ``mult`` maps normalised pairs (u <= v) to positive counts."""

    vertices: frozenset
    mult: Mapping = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (u, v), c in dict(self.mult).items():
            if c < 0:
                raise ValueError("negative multiplicity")
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u},{v}) touches an unknown vertex")
            if c:
                key = _pair(u, v)
                clean[key] = clean.get(key, 0) + c
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "mult", MappingProxyType(clean))

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.vertices == other.vertices and dict(self.mult) == dict(other.mult)

    def __hash__(self):
        return hash((self.vertices, frozenset(self.mult.items())))

    def degree(self, v) -> int:
        d = 0
        for (a, b), c in self.mult.items():
            if a == v:
                d += c
            if b == v:
                d += c
        return d

    def degrees(self) -> dict:
        deg = dict.fromkeys(self.vertices, 0)
        for (a, b), c in self.mult.items():
            deg[a] += c
            deg[b] += c
        return deg

    def multiplicity(self, u, v) -> int:
        return self.mult.get(_pair(u, v), 0)

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class CapacitatedGraph:
    graph: Graph
    capacity: tuple

    def __post_init__(self):
        cap = tuple(self.capacity)
        if len(cap) != self.graph.n:
            raise ValueError("capacity must be defined for every vertex")
        if any(c < 0 for c in cap):
            raise ValueError("capacities must be nonnegative")
        object.__setattr__(self, "capacity", cap)

    @property
    def n(self) -> int:
        return self.graph.n


def consolidate(g: MultiGraph, Z, z) -> MultiGraph:
    """Replace the vertex set Z by a single fresh vertex z, keeping Z-to-outside edges."""
    Z = frozenset(Z)
    if not Z:
        raise ValueError("cannot consolidate an empty set")
    if not Z <= g.vertices:
        raise ValueError("Z contains unknown vertices")
    if z in g.vertices:
        raise ValueError(f"vertex id {z} is already in use")
    mult: Counter = Counter()
    for (a, b), c in g.mult.items():
        ia, ib = a in Z, b in Z
        if ia and ib:
            continue
        mult[_pair(z if ia else a, z if ib else b)] += c
    return MultiGraph((g.vertices - Z) | {z}, mult)


def _suppress_into(mult: dict, adj: dict, v) -> None:
    # in-place suppression on a mutable adjacency; adj[v] is a Counter of neighbour -> count
    # (a loop at v is stored as adj[v][v] = count)
    nbrs = adj.pop(v)
    ends = []
    for u, c in nbrs.items():
        if u == v:
            continue
        ends.extend([u] * c)
        del adj[u][v]
        mult.pop(_pair(u, v), None)
    mult.pop((v, v), None)
    if len(ends) == 2:
        x, y = ends
        mult[_pair(x, y)] = mult.get(_pair(x, y), 0) + 1
        adj[x][y] += 1
        if x != y:
            adj[y][x] += 1


def _degree(adj: dict, v) -> int:
    return sum(2 * c if u == v else c for u, c in adj[v].items())


def _mutable(g: MultiGraph):
    mult = dict(g.mult)
    adj = {v: Counter() for v in g.vertices}
    for (a, b), c in mult.items():
        adj[a][b] += c
        if a != b:
            adj[b][a] += c
    return mult, adj


def suppress(g: MultiGraph, v) -> MultiGraph:
    """Delete a vertex of degree at most two, joining its two edge-ends if it had two neighbours."""
    if v not in g.vertices:
        raise ValueError(f"unknown vertex {v}")
    if g.degree(v) > 2:
        raise ValueError(f"vertex {v} has degree {g.degree(v)} > 2")
    mult, adj = _mutable(g)
    _suppress_into(mult, adj, v)
    return MultiGraph(frozenset(adj), mult)


def three_center(g: MultiGraph, X, order=None) -> MultiGraph:
    """Exhaustively suppress vertices outside X of degree <= 2.

    The worklist pops the smallest id first.  ``order`` may supply an explicit
    priority (vertex -> rank) so tests can exercise other suppression orders.
    """
    X = frozenset(X)
    if not X <= g.vertices:
        raise ValueError("X must be a subset of the vertices")
    mult, adj = _mutable(g)
    rank = (lambda v: v) if order is None else (lambda v: order[v])
    heap = [(rank(v), v) for v in adj if v not in X and _degree(adj, v) <= 2]
    heapq.heapify(heap)
    while heap:
        _, v = heapq.heappop(heap)
        if v not in adj or _degree(adj, v) > 2:
            continue
        touched = [u for u in adj[v] if u != v]
        _suppress_into(mult, adj, v)
        for u in touched:
            if u in adj and u not in X and _degree(adj, u) <= 2:
                heapq.heappush(heap, (rank(u), u))
    return MultiGraph(frozenset(adj), mult)
