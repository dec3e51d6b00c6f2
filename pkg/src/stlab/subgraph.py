"""Subgraph containment (not-necessarily-induced semantics).

Two detectors are provided.  ``find_theta`` decides whether a host contains a
hub-and-paths pattern: two vertices joined by three internally disjoint paths
of prescribed lengths.  ``contains_subgraph`` is a generic backtracking
matcher used as an independent cross-check.  Both return explicit witnesses
so that every positive answer can be re-validated by direct edge lookups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bits

__all__ = [
    "ThetaSpec",
    "ThetaWitness",
    "SubgraphWitness",
    "find_theta",
    "contains_subgraph",
]


@dataclass(frozen=True)
class ThetaSpec:
    """Path lengths ``l1 <= l2 <= l3`` with ``l2 >= 2`` of a theta pattern."""

    l1: int
    l2: int
    l3: int

    def __post_init__(self):
        if not (1 <= self.l1 <= self.l2 <= self.l3):
            raise ValueError("path lengths must satisfy 1 <= l1 <= l2 <= l3")
        if self.l2 < 2:
            raise ValueError("the second path length must be at least 2")

    @classmethod
    def coerce(cls, value) -> "ThetaSpec":
        if isinstance(value, ThetaSpec):
            return value
        l1, l2, l3 = value
        return cls(int(l1), int(l2), int(l3))

    @classmethod
    def parse(cls, text: str) -> "ThetaSpec":
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated lengths, got {text!r}")
        return cls(*(int(p) for p in parts))

    def as_tuple(self) -> tuple:
        return (self.l1, self.l2, self.l3)

    @property
    def order(self) -> int:
        """Number of vertices of the pattern."""
        return 2 + (self.l1 - 1) + (self.l2 - 1) + (self.l3 - 1)

    @property
    def size(self) -> int:
        """Number of edges of the pattern."""
        return self.l1 + self.l2 + self.l3


@dataclass(frozen=True)
class ThetaWitness:
    """Hub pair plus three host paths certifying a theta containment."""

    hubs: tuple
    paths: tuple

    def validate(self, g: Graph, spec=None) -> bool:
        a, b = self.hubs
        if len(self.paths) != 3:
            return False
        if spec is not None:
            spec = ThetaSpec.coerce(spec)
            if tuple(sorted(len(p) - 1 for p in self.paths)) != spec.as_tuple():
                return False
        interiors = []
        for path in self.paths:
            if path[0] != a or path[-1] != b:
                return False
            if len(set(path)) != len(path):
                return False
            for u, v in zip(path, path[1:]):
                if not g.has_edge(u, v):
                    return False
            interiors.append(set(path[1:-1]))
        for i in range(3):
            for j in range(i + 1, 3):
                if interiors[i] & interiors[j]:
                    return False
            if interiors[i] & {a, b}:
                return False
        return True

    def to_json_dict(self) -> dict:
        return {"hubs": list(self.hubs), "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class SubgraphWitness:
    """Injective map from pattern vertices to host vertices preserving edges."""

    mapping: tuple

    def validate(self, g: Graph, pattern: Graph) -> bool:
        if len(self.mapping) != pattern.n:
            return False
        if len(set(self.mapping)) != pattern.n:
            return False
        return all(g.has_edge(self.mapping[u], self.mapping[v])
                   for u, v in pattern.edges())

    def to_json_dict(self) -> dict:
        return {"mapping": list(self.mapping)}


# ---------------------------------------------------------------------------
# theta detection
# ---------------------------------------------------------------------------


def find_theta(g: Graph, spec) -> ThetaWitness | None:
    """Witness for a theta containment in ``g``, or None.

    The search is deterministic: hubs are scanned in ascending order and
    paths in lexicographic depth-first order, so the first witness found is
    reproducible across runs.
    """
    spec = ThetaSpec.coerce(spec)
    if g.n < spec.order or g.m < spec.size:
        return None
    if spec.as_tuple() == (1, 3, 3):
        return _find_theta_133(g.n, g.adj)
    return _find_theta_general(g.n, g.adj, spec)


def _find_theta_133(n: int, adj) -> ThetaWitness | None:
    """Specialised detector for the (1, 3, 3) pattern.

    For each edge (a, b), the internal pairs (x1, x2) with a-x1-x2-b a path
    form a family of 2-sets; the pattern is present exactly when two of the
    sets are disjoint.  A family of pairwise intersecting 2-sets either has
    a common element or lives inside a 3-set, which gives a linear-time
    absence test before the quadratic scan for a witness.
    """
    for a in range(n):
        row_a = adj[a]
        for b in _bits(row_a):
            if b <= a:
                continue
            excluded = (1 << a) | (1 << b)
            pairs = []
            for x1 in _bits(row_a & ~excluded):
                seconds = adj[x1] & adj[b] & ~excluded & ~(1 << x1)
                for x2 in _bits(seconds):
                    pairs.append((x1, x2, (1 << x1) | (1 << x2)))
            if len(pairs) < 2:
                continue
            common = pairs[0][2]
            union = 0
            for _, _, mask in pairs:
                common &= mask
                union |= mask
            if common or union.bit_count() <= 3:
                continue
            for i in range(len(pairs)):
                mask_i = pairs[i][2]
                for j in range(i + 1, len(pairs)):
                    if not mask_i & pairs[j][2]:
                        x1, x2, _ = pairs[i]
                        y1, y2, _ = pairs[j]
                        return ThetaWitness(
                            (a, b),
                            ((a, b), (a, x1, x2, b), (a, y1, y2, b)),
                        )
    return None


def _paths_of_length(adj, a: int, b: int, length: int):
    """All paths of exactly ``length`` edges from ``a`` to ``b`` whose interior
    avoids both endpoints, as (path tuple, interior bitmask) in lexicographic
    order."""
    if length == 1:
        return [((a, b), 0)] if (adj[a] >> b) & 1 else []
    out = []
    endpoints = (1 << a) | (1 << b)

    def extend(current, used, trail):
        if len(trail) == length:
            if (adj[current] >> b) & 1:
                out.append((tuple(trail) + (b,), used))
            return
        for w in _bits(adj[current] & ~used & ~endpoints):
            extend(w, used | (1 << w), trail + [w])

    extend(a, 0, [a])
    return out


def _find_theta_general(n: int, adj, spec: ThetaSpec) -> ThetaWitness | None:
    """Hub-pair enumeration with per-length path lists.

    Paths of each required length are enumerated once per hub pair and the
    three slots are filled by a disjointness scan over interior bitmasks;
    equal-length slots take strictly increasing list indices to avoid
    symmetric rework.
    """
    l1, l2, l3 = spec.as_tuple()
    for a in range(n):
        if adj[a].bit_count() < 3:
            continue
        for b in range(a + 1, n):
            if adj[b].bit_count() < 3:
                continue
            if l1 == 1 and not (adj[a] >> b) & 1:
                continue
            lists = {}
            feasible = True
            for length in {l1, l2, l3}:
                lists[length] = _paths_of_length(adj, a, b, length)
                if not lists[length]:
                    feasible = False
                    break
            if not feasible:
                continue
            first, second, third = lists[l1], lists[l2], lists[l3]
            for i, (p1, m1) in enumerate(first):
                j_start = i + 1 if l2 == l1 else 0
                for j in range(j_start, len(second)):
                    p2, m2 = second[j]
                    if m1 & m2:
                        continue
                    k_start = j + 1 if l3 == l2 else 0
                    taken = m1 | m2
                    for k in range(k_start, len(third)):
                        p3, m3 = third[k]
                        if not m3 & taken:
                            return ThetaWitness((a, b), (p1, p2, p3))
    return None


# ---------------------------------------------------------------------------
# generic subgraph isomorphism
# ---------------------------------------------------------------------------


def _matching_order(pattern: Graph):
    """Pattern vertices ordered so each one (after a component's root) has an
    already-placed neighbour; roots are chosen by descending degree."""
    n = pattern.n
    placed = []
    placed_set = set()
    while len(placed) < n:
        remaining = [v for v in range(n) if v not in placed_set]
        root = max(remaining, key=lambda v: (pattern.degree(v), -v))
        placed.append(root)
        placed_set.add(root)
        grown = True
        while grown:
            grown = False
            candidates = [
                v for v in range(n)
                if v not in placed_set and any(w in placed_set for w in pattern.neighbors(v))
            ]
            if candidates:
                nxt = max(candidates, key=lambda v: (
                    sum(1 for w in pattern.neighbors(v) if w in placed_set),
                    pattern.degree(v),
                    -v,
                ))
                placed.append(nxt)
                placed_set.add(nxt)
                grown = True
    return placed


def contains_subgraph(g: Graph, pattern: Graph) -> SubgraphWitness | None:
    """Witness embedding of ``pattern`` into ``g`` (subgraph semantics), or None.

    Backtracking over a connectivity-aware vertex order with degree pruning;
    adjacency to already-placed pattern neighbours is enforced through bitmask
    intersections, so only consistent host candidates are ever visited.
    """
    if pattern.n == 0:
        return SubgraphWitness(())
    if any(pattern.degree(v) == 0 for v in range(pattern.n)):
        raise ValueError("pattern must not contain isolated vertices")
    if pattern.n > g.n or pattern.m > g.m:
        return None

    order = _matching_order(pattern)
    position = {v: i for i, v in enumerate(order)}
    earlier_neighbors = [
        [w for w in pattern.neighbors(v) if position[w] < position[v]]
        for v in order
    ]
    pattern_degrees = [pattern.degree(v) for v in order]
    host_degrees = [g.degree(u) for u in range(g.n)]
    full = (1 << g.n) - 1
    mapping = [-1] * pattern.n

    def assign(index: int, used: int) -> bool:
        if index == pattern.n:
            return True
        v = order[index]
        candidates = full & ~used
        for w in earlier_neighbors[index]:
            candidates &= g.adj[mapping[w]]
        needed = pattern_degrees[index]
        for h in _bits(candidates):
            if host_degrees[h] < needed:
                continue
            mapping[v] = h
            if assign(index + 1, used | (1 << h)):
                return True
        mapping[v] = -1
        return False

    if assign(0, 0):
        return SubgraphWitness(tuple(mapping))
    return None
