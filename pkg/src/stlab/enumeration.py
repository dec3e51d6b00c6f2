"""Isomorph-free exhaustive generation of connected graphs by edge count.

Level ``m`` is produced from level ``m - 1`` by two augmentations of every
representative: adding an edge between an existing non-adjacent pair, and
attaching a fresh pendant vertex.  This is complete because any connected
graph with at least two edges loses an edge to a connected parent: remove a
pendant vertex if one exists, otherwise remove any cycle edge.  Duplicates
are removed with canonical certificates, and each class is stored as its
canonical representative, so iteration order is identical across runs.
"""

from __future__ import annotations

import warnings
from functools import lru_cache

from .graphs import Graph, canonical_pair
from .subgraph import ThetaSpec, find_theta

SOFT_EDGE_CAP = 11

__all__ = ["connected_graphs", "count_theta_free", "SOFT_EDGE_CAP"]


@lru_cache(maxsize=None)
def _level(m: int):
    if m < 1:
        raise ValueError("edge count must be at least 1")
    if m == 1:
        rep, _ = canonical_pair(Graph.from_edges(2, [(0, 1)]))
        return (rep,)
    found = {}
    for parent in _level(m - 1):
        n = parent.n
        for u in range(n):
            row = parent.adj[u]
            for v in range(u + 1, n):
                if not (row >> v) & 1:
                    child = parent.add_edge(u, v)
                    rep, cert = canonical_pair(child)
                    if cert not in found:
                        found[cert] = rep
        for u in range(n):
            child = parent.add_pendant(u)
            rep, cert = canonical_pair(child)
            if cert not in found:
                found[cert] = rep
    return tuple(found[cert] for cert in sorted(found))


def connected_graphs(m: int):
    """Iterate one representative per isomorphism class of connected graphs
    with exactly ``m`` edges (hence no isolated vertices), in certificate
    order.  Validation and the desk-scale warning fire immediately; the
    level itself is built on first use."""
    if m < 1:
        raise ValueError("edge count must be at least 1")
    if m > SOFT_EDGE_CAP:
        warnings.warn(
            f"enumerating m={m} goes beyond the intended desk scale "
            f"(m <= {SOFT_EDGE_CAP}) and may be very slow",
            stacklevel=2,
        )

    def _generate():
        yield from _level(m)

    return _generate()


def count_theta_free(m: int, spec) -> tuple:
    """(total, pattern-free) counts over connected graphs with ``m`` edges."""
    spec = ThetaSpec.coerce(spec)
    total = 0
    free = 0
    for g in connected_graphs(m):
        total += 1
        if find_theta(g, spec) is None:
            free += 1
    return total, free
