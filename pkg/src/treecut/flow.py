"""Bipartite b-matching by augmenting paths.

Every left item must be matched to one of its allowed right slots; right slot r
accepts at most cap[r] items.  Equivalent to a unit-capacity max-flow from a
source through items and slots to a sink, but small enough to write directly.
"""

from __future__ import annotations

from typing import Hashable, Mapping, Sequence


def b_matching(options: Sequence[Sequence[Hashable]], cap: Mapping[Hashable, int]):
    """Return a list assigning each item a slot, or None if no full assignment exists."""
    assigned_to = [None] * len(options)
    load: dict = {}
    holders: dict = {}

    def augment(i, seen):
        for r in options[i]:
            if cap.get(r, 0) <= 0 or r in seen:
                continue
            seen.add(r)
            if load.get(r, 0) < cap[r]:
                _place(i, r)
                return True
            for j in list(holders.get(r, ())):
                if augment(j, seen):
                    _remove(j, r)
                    _place(i, r)
                    return True
        return False

    def _place(i, r):
        assigned_to[i] = r
        load[r] = load.get(r, 0) + 1
        holders.setdefault(r, set()).add(i)

    def _remove(j, r):
        # j has already been re-placed elsewhere by the recursive call
        load[r] -= 1
        holders[r].discard(j)

    for i in range(len(options)):
        if not augment(i, set()):
            return None
    return assigned_to


def vertex_cover_assignment(edges, C, capacity):
    """Edge -> endpoint in C respecting capacity, or None."""
    C = set(C)
    opts = [[x for x in e if x in C] for e in edges]
    return b_matching(opts, {v: capacity[v] for v in C})


def domination_assignment(vertices, adj, D, capacity):
    """Vertex outside D -> neighbour in D respecting capacity, or None."""
    D = set(D)
    out = [v for v in vertices if v not in D]
    opts = [[u for u in adj[v] if u in D] for v in out]
    res = b_matching(opts, {v: capacity[v] for v in D})
    if res is None:
        return None
    return dict(zip(out, res))
