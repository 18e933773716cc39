"""Shared per-node data for the dynamic programs over nice decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from treecut.decomposition import NodeMetrics, TreeCutDecomposition, metrics
from treecut.graph import Graph
from treecut.nice import ChildPartition, all_partitions, nicify


@dataclass
class DpContext:
    g: Graph
    dec: TreeCutDecomposition
    met: NodeMetrics
    parts: list

    @property
    def width(self) -> int:
        return self.met.width

    def bag(self, t):
        return self.dec.bags[t]

    def y(self, t):
        return self.met.y_set[t]

    def boundary(self, t):
        return self.met.boundary[t]

    def adh_v(self, t, v) -> int:
        return self.met.adh_v.get((t, v), 0)

    def a_children(self, t) -> list:
        return sorted(self.parts[t].a_set)

    def b_children(self, t) -> list:
        return sorted(self.parts[t].b_set)

    @cached_property
    def _k_edges(self) -> list:
        out = []
        for t in self.dec.nodes:
            y = self.met.y_set[t]
            out.append(tuple(sorted(e for e in self.g.edges if (e[0] in y) != (e[1] in y))))
        return out

    def k_edges(self, t) -> tuple:
        """Edges with exactly one endpoint in Y_t, sorted."""
        return self._k_edges[t]


def prepare(g: Graph, dec: TreeCutDecomposition, empty_root: bool = False) -> DpContext:
    nd = nicify(g, dec)
    if empty_root and nd.bags[nd.root]:
        # hang the whole decomposition below a fresh empty root
        new = nd.size
        parent = list(nd.parent) + [new]
        parent[nd.root] = new
        nd = TreeCutDecomposition(tuple(parent), nd.bags + (frozenset(),), new)
    met = metrics(g, nd)
    parts = all_partitions(g, nd, met)
    return DpContext(g, nd, met, parts)
