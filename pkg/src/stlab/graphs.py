"""Immutable simple graphs on up to 64 vertices with bitset adjacency rows.

Vertices are the integers ``0..n-1``.  Row ``adj[u]`` is a Python int whose
set bits are the neighbours of ``u``, so neighbourhood algebra (unions,
intersections, complements) is single-word arithmetic.  Graphs are values:
every edit returns a new instance, which makes sharing across threads and
worker processes safe.

The module also provides the standard constructions used throughout the
workbench (paths, cycles, stars, joins, hub-and-paths "theta" patterns, and
clique joins ``K_k v t*K_1``), canonical forms with isomorphism certificates
for small graphs, and graph6 / JSON / DOT input-output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

MAX_VERTICES = 64
CANONICAL_CAP = 12

__all__ = [
    "MAX_VERTICES",
    "CANONICAL_CAP",
    "Graph",
    "FamilySpec",
    "construct",
    "join",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_graph",
    "complete_bipartite_graph",
    "star_plus_edge",
    "double_star",
    "theta_graph",
    "k_join",
    "certificate",
    "canonical_graph",
    "canonical_pair",
    "encode_graph6",
    "decode_graph6",
    "is_complete_bipartite",
    "random_connected_graph",
]


def _bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph stored as one adjacency bitset per vertex."""

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        degree_total = 0
        for u, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {u} mentions a vertex outside 0..{n - 1}")
            if (row >> u) & 1:
                raise ValueError(f"self-loop at vertex {u}")
            degree_total += row.bit_count()
        for u, row in enumerate(rows):
            rest = row
            while rest:
                low = rest & -rest
                w = low.bit_length() - 1
                rest ^= low
                if not (rows[w] >> u) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({u}, {w})")
        self.n = n
        self.adj = rows
        self.m = degree_total // 2

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build a graph on ``n`` vertices from an iterable of index pairs."""
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- queries ---------------------------------------------------------

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> tuple:
        return tuple(_bits(self.adj[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> list:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def degree_sequence(self) -> tuple:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    # -- edits (all return new graphs) ------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError("cannot add a self-loop")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def add_pendant(self, u: int) -> "Graph":
        """Attach a new vertex (index ``n``) to ``u``."""
        if self.n >= MAX_VERTICES:
            raise ValueError("vertex capacity exceeded")
        rows = list(self.adj)
        rows[u] |= 1 << self.n
        rows.append(1 << u)
        return Graph(self.n + 1, rows)

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex ``u`` renamed to ``perm[u]``."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabeling must be a permutation of 0..n-1")
        rows = [0] * self.n
        for u, row in enumerate(self.adj):
            acc = 0
            for v in _bits(row):
                acc |= 1 << perm[v]
            rows[perm[u]] = acc
        return Graph(self.n, rows)

    def induced(self, vertices) -> "Graph":
        """Induced subgraph on the given vertices, relabelled in sorted order."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        rows = [0] * len(vs)
        for v in vs:
            for w in _bits(self.adj[v]):
                if w in pos:
                    rows[pos[v]] |= 1 << pos[w]
        return Graph(len(vs), rows)

    # -- connectivity ------------------------------------------------------

    def component_masks(self) -> list:
        """Connected components as bitmasks, ordered by smallest member."""
        out = []
        unseen = (1 << self.n) - 1
        while unseen:
            seed = unseen & -unseen
            comp = seed
            frontier = seed
            while frontier:
                reach = 0
                for u in _bits(frontier):
                    reach |= self.adj[u]
                frontier = reach & ~comp
                comp |= frontier
            out.append(comp)
            unseen &= ~comp
        return out

    def components(self) -> list:
        """Connected components as sorted vertex tuples."""
        return [tuple(_bits(mask)) for mask in self.component_masks()]

    def is_connected(self) -> bool:
        return self.n == 0 or len(self.component_masks()) == 1

    def diameter(self):
        """Greatest distance between two vertices; ``math.inf`` if disconnected."""
        if self.n == 0:
            return 0
        full = (1 << self.n) - 1
        best = 0
        for s in range(self.n):
            seen = 1 << s
            frontier = seen
            dist = 0
            while True:
                reach = 0
                for u in _bits(frontier):
                    reach |= self.adj[u]
                frontier = reach & ~seen
                if not frontier:
                    break
                dist += 1
                seen |= frontier
            if seen != full:
                return math.inf
            best = max(best, dist)
        return best

    # -- exports -----------------------------------------------------------

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, row in enumerate(self.adj):
            for v in _bits(row):
                a[u, v] = 1.0
        return a

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [[u, v] for u, v in self.edges()]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        try:
            n = int(data["n"])
            edges = [(int(u), int(v)) for u, v in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed graph JSON: {exc}") from None
        return cls.from_edges(n, edges)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines.extend(f"  {u};" for u in range(self.n))
        lines.extend(f"  {u} -- {v};" for u, v in self.edges())
        lines.append("}")
        return "\n".join(lines)

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __reduce__(self):
        return (Graph, (self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# standard constructions
# ---------------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (n >= 2)."""
    if n < 2:
        raise ValueError("a path needs at least 2 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """Cycle on ``n`` vertices (n >= 3)."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(r: int) -> Graph:
    """Star with centre 0 and ``r`` leaves (r >= 1)."""
    if r < 1:
        raise ValueError("a star needs at least 1 leaf")
    return Graph.from_edges(r + 1, [(0, i) for i in range(1, r + 1)])


def complete_graph(n: int) -> Graph:
    """Complete graph on ``n`` vertices (n >= 2)."""
    if n < 2:
        raise ValueError("a complete graph needs at least 2 vertices")
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """Complete bipartite graph with sides ``0..a-1`` and ``a..a+b-1``."""
    if a < 1 or b < 1:
        raise ValueError("both sides need at least one vertex")
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def star_plus_edge(r: int) -> Graph:
    """Star with ``r`` leaves plus one edge between two leaves (r >= 2)."""
    if r < 2:
        raise ValueError("adding an edge inside a star needs at least 2 leaves")
    g = star_graph(r)
    return g.add_edge(1, 2)


def double_star(a: int, b: int) -> Graph:
    """Two adjacent centres 0 and 1 carrying ``a`` and ``b`` leaves (a, b >= 1)."""
    if a < 1 or b < 1:
        raise ValueError("each centre of a double star needs at least one leaf")
    edges = [(0, 1)]
    edges.extend((0, 2 + i) for i in range(a))
    edges.extend((1, 2 + a + i) for i in range(b))
    return Graph.from_edges(2 + a + b, edges)


def theta_graph(l1: int, l2: int, l3: int) -> Graph:
    """Two hub vertices joined by three internally disjoint paths.

    The paths have lengths ``l1 <= l2 <= l3`` with ``l2 >= 2`` (two paths of
    length 1 would be a multi-edge).  Hubs are vertices 0 and 1.
    """
    if not (1 <= l1 <= l2 <= l3):
        raise ValueError("path lengths must satisfy 1 <= l1 <= l2 <= l3")
    if l2 < 2:
        raise ValueError("the second path length must be at least 2")
    edges = []
    nxt = 2
    for length in (l1, l2, l3):
        if length == 1:
            edges.append((0, 1))
            continue
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def k_join(k: int, t: int) -> Graph:
    """Clique join ``K_k v t*K_1``: a k-clique fully joined to t isolated vertices."""
    if k < 1 or t < 1:
        raise ValueError("the clique join needs k >= 1 and t >= 1")
    if k + t > MAX_VERTICES:
        raise ValueError("vertex capacity exceeded")
    edges = list(combinations(range(k), 2))
    edges.extend((u, k + v) for u in range(k) for v in range(t))
    return Graph.from_edges(k + t, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus all edges between them."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError("vertex capacity exceeded")
    rows = []
    h_full = ((1 << h.n) - 1) << g.n
    g_full = (1 << g.n) - 1
    for row in g.adj:
        rows.append(row | h_full)
    for row in h.adj:
        rows.append((row << g.n) | g_full)
    return Graph(n, rows)


@dataclass(frozen=True)
class FamilySpec:
    """Tag plus integer parameters naming one of the standard constructions."""

    family: str
    params: tuple


_FAMILIES = {
    "path": (1, path_graph),
    "cycle": (1, cycle_graph),
    "star": (1, star_graph),
    "complete": (1, complete_graph),
    "complete_bipartite": (2, complete_bipartite_graph),
    "star_plus_edge": (1, star_plus_edge),
    "double_star": (2, double_star),
    "theta": (3, theta_graph),
    "k_join": (2, k_join),
}


def construct(spec: FamilySpec) -> Graph:
    """Build the graph named by a :class:`FamilySpec`."""
    if spec.family not in _FAMILIES:
        raise ValueError(f"unknown family {spec.family!r}")
    arity, builder = _FAMILIES[spec.family]
    params = tuple(int(p) for p in spec.params)
    if len(params) != arity:
        raise ValueError(f"family {spec.family!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


def is_complete_bipartite(g: Graph) -> bool:
    """True when ``g`` is a complete bipartite graph (both sides nonempty)."""
    if g.n < 2 or g.m == 0 or not g.is_connected():
        return False
    even = 1
    odd = 0
    frontier = 1
    seen = 1
    layer = 0
    while frontier:
        reach = 0
        for u in _bits(frontier):
            reach |= g.adj[u]
        frontier = reach & ~seen
        seen |= frontier
        layer += 1
        if layer % 2 == 1:
            odd |= frontier
        else:
            even |= frontier
    # complete across the BFS bipartition, nothing inside a side
    return all(g.adj[u] == odd for u in _bits(even)) and all(g.adj[u] == even for u in _bits(odd))


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------


def _refine(adj, colors):
    """Iterate colour refinement to an equitable fixpoint.

    Each round recolours vertices by (old colour, multiset of neighbour
    colours); the new colour ids follow the sorted signature order, so the
    result depends only on the isomorphism type.
    """
    n = len(colors)
    while True:
        sigs = []
        for u in range(n):
            counts = {}
            for v in _bits(adj[u]):
                c = colors[v]
                counts[c] = counts.get(c, 0) + 1
            sigs.append((colors[u], tuple(sorted(counts.items()))))
        lookup = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [lookup[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _cells(colors):
    groups = {}
    for v, c in enumerate(colors):
        groups.setdefault(c, []).append(v)
    return [groups[c] for c in sorted(groups)]


def _is_twin_cell(adj, cell):
    """True when every two cell members have identical neighbourhoods
    (ignoring each other), i.e. swapping them is an automorphism."""
    for a, b in combinations(cell, 2):
        if adj[a] & ~(1 << b) != adj[b] & ~(1 << a):
            return False
    return True


def _gen_orders(adj, colors):
    """Yield candidate vertex orders via individualisation-refinement.

    Cells of mutual twins are left unsplit; any internal order gives the same
    adjacency matrix, so they are ordered by original index at the leaves.
    """
    cells = _cells(colors)
    for cell in cells:
        if len(cell) > 1 and not _is_twin_cell(adj, cell):
            base = colors[cell[0]]
            for u in cell:
                branched = [2 * c for c in colors]
                branched[u] = 2 * base - 1
                yield from _gen_orders(adj, _refine(adj, branched))
            return
    yield tuple(sorted(range(len(colors)), key=lambda v: (colors[v], v)))


def _pack_bits(adj, order):
    bits = 0
    n = len(order)
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            bits = (bits << 1) | ((row >> order[j]) & 1)
    return bits


def _canonicalize(g: Graph, cap: int):
    if g.n > cap:
        raise ValueError(f"canonical form supports at most {cap} vertices, got {g.n}")
    if g.n == 0:
        return (), 0
    degrees = [row.bit_count() for row in g.adj]
    rank = {d: i for i, d in enumerate(sorted(set(degrees)))}
    colors = _refine(g.adj, [rank[d] for d in degrees])
    best_bits = None
    best_order = None
    for order in _gen_orders(g.adj, colors):
        bits = _pack_bits(g.adj, order)
        if best_bits is None or bits < best_bits:
            best_bits = bits
            best_order = order
    return best_order, best_bits


def certificate(g: Graph, cap: int = CANONICAL_CAP) -> bytes:
    """Byte string identifying the isomorphism class of ``g`` (n <= cap).

    Two graphs within the cap share a certificate exactly when they are
    isomorphic; the value is invariant under vertex relabelling.
    """
    _, bits = _canonicalize(g, cap)
    nbytes = (g.n * (g.n - 1) // 2 + 7) // 8
    return bytes([g.n]) + bits.to_bytes(nbytes, "big")


def canonical_graph(g: Graph, cap: int = CANONICAL_CAP) -> Graph:
    """The canonical representative of ``g``'s isomorphism class."""
    order, _ = _canonicalize(g, cap)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm)


def canonical_pair(g: Graph, cap: int = CANONICAL_CAP):
    """(canonical representative, certificate) computed in one pass."""
    order, bits = _canonicalize(g, cap)
    nbytes = (g.n * (g.n - 1) // 2 + 7) // 8
    cert = bytes([g.n]) + bits.to_bytes(nbytes, "big")
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm), cert


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Encode as standard graph6: size prefix, then the upper triangle read
    column by column, six bits per printable character (offset 63)."""
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = chr(126) + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    chars = []
    acc = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | ((g.adj[i] >> j) & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(63 + acc))
                acc = 0
                filled = 0
    if filled:
        acc <<= 6 - filled
        chars.append(chr(63 + acc))
    return head + "".join(chars)


def decode_graph6(text: str) -> Graph:
    """Decode a graph6 string; raises ValueError on malformed input."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    codes = []
    for ch in s:
        value = ord(ch) - 63
        if not 0 <= value <= 63:
            raise ValueError(f"invalid graph6 character {ch!r}")
        codes.append(value)
    if codes[0] == 63:
        if len(codes) < 4:
            raise ValueError("truncated graph6 size prefix")
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 order {n} exceeds the {MAX_VERTICES}-vertex capacity")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError("graph6 body has the wrong length")
    stream = 0
    for value in body:
        stream = (stream << 6) | value
    total = 6 * len(body)
    pad = total - nbits
    if pad and stream & ((1 << pad) - 1):
        raise ValueError("graph6 padding bits must be zero")
    edges = []
    pos = total - 1
    for j in range(1, n):
        for i in range(j):
            if (stream >> pos) & 1:
                edges.append((i, j))
            pos -= 1
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# randomised constructions (seeded by the caller)
# ---------------------------------------------------------------------------


def random_connected_graph(n: int, m: int, rng) -> Graph:
    """Random connected graph with ``n`` vertices and exactly ``m`` edges.

    A random recursive tree provides connectivity, then ``rng``-shuffled
    spare pairs top the edge count up to ``m``.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"n must be in 1..{MAX_VERTICES}")
    if not max(0, n - 1) <= m <= n * (n - 1) // 2:
        raise ValueError(f"m={m} impossible for a connected graph on {n} vertices")
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    spare = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(spare)
    edges.update(spare[: m - (n - 1)])
    return Graph.from_edges(n, edges)
