"""Size-constrained spectral extremal experiments.

For a forbidden theta pattern with a hub edge, the natural candidate
maximiser of the spectral radius among pattern-free graphs with ``m`` edges
is a clique join ``K_k v t*K_1``; its radius ``(k-1 + sqrt(4m - k^2 + 1))/2``
doubles as the reference bound.  This module evaluates that bound, builds
the construction, certifies small edge counts exhaustively, reports the
extremal-vertex neighbourhood decomposition of a concrete graph, and runs a
seeded hill-climbing search over pattern-free graphs of fixed size.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial

import numpy as np

from .enumeration import connected_graphs
from .graphs import (
    Graph,
    _bits,
    certificate,
    encode_graph6,
    k_join,
    random_connected_graph,
    star_graph,
)
from .spectral import _iterate, _shifted_matrix, spectral_radius
from .subgraph import ThetaSpec, find_theta

LAMBDA_TIE_TOL = 1e-9
SEARCH_GAIN_TOL = 1e-12

__all__ = [
    "bound_value",
    "bound_clique_size",
    "extremal_construction",
    "verify_class",
    "landscape_table",
    "inspect",
    "local_search",
    "VerificationReport",
    "DecompositionReport",
    "ComponentSummary",
    "SearchReport",
]


def bound_value(k: int, m: int) -> float:
    """Reference radius ``(k - 1 + sqrt(4m - k^2 + 1)) / 2``.

    At ``k = 2`` this is ``(1 + sqrt(4m - 3)) / 2``, the spectral radius of
    the book graph ``K_2 v ((m-1)/2)K_1``.
    """
    if k < 1:
        raise ValueError("clique parameter must be at least 1")
    if m < 0:
        raise ValueError("edge count must be nonnegative")
    discriminant = 4 * m - k * k + 1
    if discriminant < 0:
        raise ValueError(f"negative discriminant: 4m - k^2 + 1 = {discriminant}")
    return (k - 1 + math.sqrt(discriminant)) / 2.0


def bound_clique_size(spec) -> int | None:
    """Clique parameter of the join construction matched to a forbidden
    pattern with a hub edge: ``(l2 + l3 - 1) // 2`` when ``l1 = 1``.  For
    patterns without a hub edge no join bound is defined and None is
    returned."""
    spec = ThetaSpec.coerce(spec)
    if spec.l1 != 1:
        return None
    return (spec.l2 + spec.l3 - 1) // 2


def extremal_construction(k: int, m: int) -> Graph:
    """The clique join ``K_k v t*K_1`` with exactly ``m`` edges.

    Requires ``t = m/k - (k-1)/2`` to be a positive integer; for ``k = 2``
    that means ``m`` odd and at least 3.
    """
    if k < 1:
        raise ValueError("clique parameter must be at least 1")
    numerator = 2 * m - k * (k - 1)
    if numerator <= 0 or numerator % (2 * k):
        raise ValueError(
            f"no clique join with k={k} has exactly m={m} edges "
            "(t = m/k - (k-1)/2 must be a positive integer)")
    return k_join(k, numerator // (2 * k))


# ---------------------------------------------------------------------------
# exhaustive verification at small edge counts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exhaustive sweep over connected pattern-free graphs."""

    m: int
    spec: tuple
    total: int
    free: int
    max_lambda: float | None
    bound: float | None
    bound_holds: bool | None
    argmax: tuple  # (graph6, lambda) pairs
    extremal_matches_construction: bool
    counterexamples: tuple  # (graph6, lambda) pairs exceeding the bound
    notes: tuple

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "spec": list(self.spec),
            "total": self.total,
            "free": self.free,
            "max_lambda": self.max_lambda,
            "bound": self.bound,
            "bound_holds": self.bound_holds,
            "argmax": [{"g6": g6, "lambda": lam} for g6, lam in self.argmax],
            "extremal_matches_construction": self.extremal_matches_construction,
            "counterexamples": [{"g6": g6, "lambda": lam} for g6, lam in self.counterexamples],
            "notes": list(self.notes),
        }


_REPORT_NOTES = (
    "search space restricted to connected graphs: a disconnected pattern-free "
    "graph attains its radius on one component with fewer edges, and the "
    "reference bound increases with the edge count, so connected "
    "representatives already dominate the maximum",
    "exhaustive certification is possible only at this desk scale; the large "
    "regime (m >= 43) where the clique join is expected to be the unique "
    "maximiser is not reproducible by exhaustive search and is corroborated "
    "here only through construction values and bounded local search",
)


def _evaluate_member(g: Graph, spec: ThetaSpec):
    free = find_theta(g, spec) is None
    lam = spectral_radius(g).lam if free else None
    return free, lam


def verify_class(m: int, spec, jobs: int = 1) -> VerificationReport:
    """Enumerate connected pattern-free graphs with ``m`` edges, locate the
    spectral-radius argmax, and compare it against the join bound and the
    join construction."""
    spec = ThetaSpec.coerce(spec)
    graphs = list(connected_graphs(m))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            evaluations = list(pool.map(partial(_evaluate_member, spec=spec),
                                        graphs, chunksize=16))
    else:
        evaluations = [_evaluate_member(g, spec) for g in graphs]

    free_members = [(g, lam) for g, (free, lam) in zip(graphs, evaluations) if free]
    free_count = len(free_members)
    max_lambda = max((lam for _, lam in free_members), default=None)
    argmax = tuple(
        (encode_graph6(g), lam)
        for g, lam in free_members
        if lam >= max_lambda - LAMBDA_TIE_TOL
    ) if max_lambda is not None else ()

    k = bound_clique_size(spec)
    bound = None
    if k is not None and 4 * m - k * k + 1 >= 0:
        bound = bound_value(k, m)
    bound_holds = None
    counterexamples = ()
    if bound is not None and max_lambda is not None:
        bound_holds = max_lambda <= bound + LAMBDA_TIE_TOL
        counterexamples = tuple(
            (encode_graph6(g), lam)
            for g, lam in free_members
            if lam > bound + LAMBDA_TIE_TOL
        )

    matches = False
    if k is not None:
        try:
            built = extremal_construction(k, m)
        except ValueError:
            built = None
        # enumerable levels keep every member within the canonical cap, so
        # class comparison by certificate is always available here
        if built is not None and built.n <= 12 and argmax \
                and find_theta(built, spec) is None:
            built_cert = certificate(built)
            argmax_certs = [certificate(g) for g, lam in free_members
                            if lam >= max_lambda - LAMBDA_TIE_TOL]
            matches = argmax_certs == [built_cert]

    return VerificationReport(
        m=m,
        spec=spec.as_tuple(),
        total=len(graphs),
        free=free_count,
        max_lambda=max_lambda,
        bound=bound,
        bound_holds=bound_holds,
        argmax=argmax,
        extremal_matches_construction=matches,
        counterexamples=counterexamples,
        notes=_REPORT_NOTES,
    )


def landscape_table(max_m: int, spec, jobs: int = 1) -> str:
    """TSV table of the sweep results for m = 1..max_m."""
    spec = ThetaSpec.coerce(spec)
    lines = ["m\ttotal\tfree\tmax_lambda\tbound\tbound_holds"]
    for m in range(1, max_m + 1):
        report = verify_class(m, spec, jobs=jobs)
        max_lam = "-" if report.max_lambda is None else f"{report.max_lambda:.6f}"
        bound = "-" if report.bound is None else f"{report.bound:.6f}"
        holds = "-" if report.bound_holds is None else ("yes" if report.bound_holds else "no")
        lines.append(f"{m}\t{report.total}\t{report.free}\t{max_lam}\t{bound}\t{holds}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# neighbourhood decomposition of a concrete graph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ComponentSummary:
    """A non-trivial component of the induced neighbourhood of the extremal
    vertex, with its branch weight sum((deg - 1) * x) over its vertices."""

    vertices: tuple
    edge_count: int
    is_tree: bool
    branch_weight: float

    def to_json_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edge_count": self.edge_count,
            "is_tree": self.is_tree,
            "branch_weight": self.branch_weight,
        }


@dataclass(frozen=True)
class DecompositionReport:
    """Quantities of the extremal-vertex decomposition of a connected graph.

    The vertex set splits into the extremal vertex ``u_star`` (maximum Perron
    entry), its neighbourhood, and the outside.  The edge identity
    ``m = |neighbours| + e(inside) + e(neighbours, outside) + e(outside)``
    holds exactly; the two eigen-identity gaps measure how well the first and
    second powers of the eigen-equation at ``u_star`` are satisfied
    numerically.  ``branch_weight_floor`` is the lower bound that the branch
    weights must meet whenever the radius reaches the clique-join reference
    value, and ``outside_edge_cap`` the induced ceiling on outside edges.
    """

    lam: float
    u_star: int
    neighbors: tuple
    neighbors_isolated: tuple
    neighbors_active: tuple
    outside: tuple
    neighborhood_components: tuple
    tree_component_count: int
    edges_in_neighborhood: int
    edges_neighborhood_outside: int
    edges_outside: int
    identity_gap: int
    eig1_gap: float
    eig2_gap: float
    branch_weight_total: float
    branch_weight_floor: float
    outside_edge_cap: float
    has_triangle_in_neighborhood: bool
    has_c4_in_neighborhood: bool
    c4_exterior_overlap: bool
    min_degree_outside: int | None

    def to_json_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "u_star": self.u_star,
            "neighbors": list(self.neighbors),
            "neighbors_isolated": list(self.neighbors_isolated),
            "neighbors_active": list(self.neighbors_active),
            "outside": list(self.outside),
            "neighborhood_components": [c.to_json_dict() for c in self.neighborhood_components],
            "tree_component_count": self.tree_component_count,
            "edges_in_neighborhood": self.edges_in_neighborhood,
            "edges_neighborhood_outside": self.edges_neighborhood_outside,
            "edges_outside": self.edges_outside,
            "identity_gap": self.identity_gap,
            "eig1_gap": self.eig1_gap,
            "eig2_gap": self.eig2_gap,
            "branch_weight_total": self.branch_weight_total,
            "branch_weight_floor": self.branch_weight_floor,
            "outside_edge_cap": self.outside_edge_cap,
            "has_triangle_in_neighborhood": self.has_triangle_in_neighborhood,
            "has_c4_in_neighborhood": self.has_c4_in_neighborhood,
            "c4_exterior_overlap": self.c4_exterior_overlap,
            "min_degree_outside": self.min_degree_outside,
        }


def _mask_components(adj, mask):
    """Connected components of the subgraph induced on ``mask``, as masks."""
    out = []
    unseen = mask
    while unseen:
        seed = unseen & -unseen
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for u in _bits(frontier):
                reach |= adj[u] & mask
            frontier = reach & ~comp
            comp |= frontier
        out.append(comp)
        unseen &= ~comp
    return out


def inspect(g: Graph) -> DecompositionReport:
    """Decompose ``g`` around its extremal vertex and evaluate the identities
    and structural predicates that drive the extremal analysis."""
    if g.n < 2:
        raise ValueError("decomposition needs at least 2 vertices")
    if not g.is_connected():
        raise ValueError("decomposition is defined for connected graphs only")
    result = spectral_radius(g)
    lam = result.lam
    x = result.x
    s = result.u_star

    nbhd_mask = g.adj[s]
    outside_mask = ((1 << g.n) - 1) & ~nbhd_mask & ~(1 << s)
    neighbors = tuple(_bits(nbhd_mask))
    outside = tuple(_bits(outside_mask))

    isolated = tuple(u for u in neighbors if not g.adj[u] & nbhd_mask)
    active = tuple(u for u in neighbors if g.adj[u] & nbhd_mask)

    edges_inside = sum((g.adj[u] & nbhd_mask).bit_count() for u in neighbors) // 2
    edges_cross = sum((g.adj[u] & outside_mask).bit_count() for u in neighbors)
    edges_outside = sum((g.adj[w] & outside_mask).bit_count() for w in outside) // 2
    identity_gap = abs(g.m - (len(neighbors) + edges_inside + edges_cross + edges_outside))

    x_star = float(x[s])
    eig1_gap = abs(lam * x_star - float(sum(x[u] for u in neighbors)))
    second = len(neighbors) * x_star
    second += float(sum((g.adj[u] & nbhd_mask).bit_count() * x[u] for u in active))
    second += float(sum((g.adj[w] & nbhd_mask).bit_count() * x[w] for w in outside))
    eig2_gap = abs(lam * lam * x_star - second)

    components = []
    tree_count = 0
    weight_total = 0.0
    for comp_mask in _mask_components(g.adj, nbhd_mask):
        vertices = tuple(_bits(comp_mask))
        if len(vertices) < 2:
            continue
        comp_edges = sum((g.adj[u] & comp_mask).bit_count() for u in vertices) // 2
        weight = float(sum(((g.adj[u] & comp_mask).bit_count() - 1) * x[u] for u in vertices))
        is_tree = comp_edges == len(vertices) - 1
        if is_tree:
            tree_count += 1
        weight_total += weight
        components.append(ComponentSummary(vertices, comp_edges, is_tree, weight))

    isolated_ratio = float(sum(x[u] for u in isolated)) / x_star
    weight_floor = (edges_inside + edges_outside + isolated_ratio - 1.0) * x_star
    outside_cap = 1.0 - tree_count - isolated_ratio

    has_triangle = any(
        g.adj[u] & g.adj[v] & nbhd_mask
        for u in active
        for v in _bits(g.adj[u] & nbhd_mask)
        if v > u
    )
    has_c4 = False
    overlap = False
    outside_reach = [g.adj[u] & outside_mask for u in range(g.n)]
    for i, u in enumerate(neighbors):
        for v in neighbors[i + 1:]:
            shared = g.adj[u] & g.adj[v] & nbhd_mask
            if shared.bit_count() < 2:
                continue
            has_c4 = True
            shared_list = tuple(_bits(shared))
            for a in range(len(shared_list)):
                for b in range(a + 1, len(shared_list)):
                    cycle = (u, shared_list[a], v, shared_list[b])
                    for p in range(4):
                        for q in range(p + 1, 4):
                            if outside_reach[cycle[p]] & outside_reach[cycle[q]]:
                                overlap = True
    min_outside = min((g.degree(w) for w in outside), default=None)

    return DecompositionReport(
        lam=lam,
        u_star=s,
        neighbors=neighbors,
        neighbors_isolated=isolated,
        neighbors_active=active,
        outside=outside,
        neighborhood_components=tuple(components),
        tree_component_count=tree_count,
        edges_in_neighborhood=edges_inside,
        edges_neighborhood_outside=edges_cross,
        edges_outside=edges_outside,
        identity_gap=identity_gap,
        eig1_gap=eig1_gap,
        eig2_gap=eig2_gap,
        branch_weight_total=weight_total,
        branch_weight_floor=weight_floor,
        outside_edge_cap=outside_cap,
        has_triangle_in_neighborhood=has_triangle,
        has_c4_in_neighborhood=has_c4,
        c4_exterior_overlap=overlap,
        min_degree_outside=min_outside,
    )


# ---------------------------------------------------------------------------
# hill-climbing search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchReport:
    """Best graph found by a seeded hill climb plus trajectory counters."""

    m: int
    spec: tuple
    seed: int
    budget: int
    start: str
    start_g6: str
    best_g6: str
    best_lambda: float
    accepted: int
    rejected_theta: int
    rejected_lambda: int
    rejected_invalid: int

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "spec": list(self.spec),
            "seed": self.seed,
            "budget": self.budget,
            "start": self.start,
            "start_g6": self.start_g6,
            "best_g6": self.best_g6,
            "best_lambda": self.best_lambda,
            "accepted": self.accepted,
            "rejected_theta": self.rejected_theta,
            "rejected_lambda": self.rejected_lambda,
            "rejected_invalid": self.rejected_invalid,
        }


def _random_free_start(m: int, spec: ThetaSpec, rng) -> Graph:
    """Random connected pattern-free graph with ``m`` edges."""
    n_floor = 2
    while n_floor * (n_floor - 1) // 2 < m:
        n_floor += 1
    n_cap = min(m + 1, 64)
    for _ in range(200):
        n = rng.randint(n_floor, n_cap)
        g = random_connected_graph(n, m, rng)
        if find_theta(g, spec) is None:
            return g
    if m <= 63:
        return star_graph(m)  # a tree, free of every theta pattern
    raise ValueError("could not construct a pattern-free start graph")


def _quick_lambda(matrix, warm, budget=50_000):
    """Rayleigh estimate of the dominant adjacency eigenvalue for move
    screening.  The estimate never exceeds the true radius, so accepted moves
    are genuine improvements even at loose tolerance."""
    return _iterate(matrix, warm, 1e-7, None, budget, allow_partial=True)


def local_search(m: int, spec, budget: int = 100_000, seed: int = 0,
                 start="random") -> SearchReport:
    """Hill climb over pattern-free graphs with ``m`` edges.

    Moves are edge rotations toward vertices with larger Perron entry and
    single-edge relocations.  A move is accepted when it keeps every vertex
    non-isolated, creates no forbidden pattern, and increases the radius by
    more than 1e-12.  Runs are deterministic for a fixed seed; the vertex
    count is fixed by the start graph since both move types preserve it.
    """
    if m < 1:
        raise ValueError("edge count must be at least 1")
    spec = ThetaSpec.coerce(spec)
    rng = random.Random(seed)

    if isinstance(start, Graph):
        if start.m != m:
            raise ValueError(f"start graph has {start.m} edges, expected {m}")
        if any(row == 0 for row in start.adj):
            raise ValueError("start graph must not contain isolated vertices")
        if find_theta(start, spec) is not None:
            raise ValueError("start graph contains the forbidden pattern")
        g0, tag = start, "custom"
    elif start == "construction":
        k = bound_clique_size(spec)
        if k is None:
            raise ValueError("no join construction exists for patterns without a hub edge")
        g0, tag = extremal_construction(k, m), "construction"
    elif start == "random":
        g0, tag = _random_free_start(m, spec, rng), "random"
    else:
        raise ValueError(f"unknown start {start!r}")

    n = g0.n
    adj = list(g0.adj)
    edge_list = g0.edges()
    matrix = _shifted_matrix(g0)
    try:
        initial = spectral_radius(g0)
        lam_cur = initial.lam
        x_cur = initial.x
    except RuntimeError:
        lam_cur, x_cur, _, _ = _quick_lambda(matrix, np.ones(n))

    accepted = 0
    rejected_theta = 0
    rejected_lambda = 0
    rejected_invalid = 0

    for _ in range(budget):
        removals = []
        additions = []
        if n >= 2 and rng.random() < 0.5:
            # rotation toward the vertex with the larger Perron entry
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u == v:
                rejected_invalid += 1
                continue
            if x_cur[u] < x_cur[v]:
                u, v = v, u
            movable = adj[v] & ~adj[u] & ~(1 << u)
            if not movable:
                rejected_invalid += 1
                continue
            if rng.random() < 0.5:
                chosen = list(_bits(movable))
            else:
                chosen = [rng.choice(list(_bits(movable)))]
            removals = [(v, s) for s in chosen]
            additions = [(u, s) for s in chosen]
        else:
            # relocate one edge
            a, b = edge_list[rng.randrange(len(edge_list))]
            for _ in range(200):
                c = rng.randrange(n)
                d = rng.randrange(n)
                if c != d and not (adj[c] >> d) & 1:
                    break
            else:
                rejected_invalid += 1
                continue
            removals = [(a, b)]
            additions = [(c, d)]

        candidate = list(adj)
        for p, q in removals:
            candidate[p] &= ~(1 << q)
            candidate[q] &= ~(1 << p)
        for p, q in additions:
            candidate[p] |= 1 << q
            candidate[q] |= 1 << p
        if any(candidate[p] == 0 or candidate[q] == 0 for p, q in removals):
            rejected_invalid += 1
            continue

        trial = matrix.copy()
        for p, q in removals:
            trial[p, q] = trial[q, p] = 0.0
        for p, q in additions:
            trial[p, q] = trial[q, p] = 1.0
        warm = x_cur + 0.05
        lam_new, x_new, _, _ = _quick_lambda(trial, warm)
        if lam_new <= lam_cur + SEARCH_GAIN_TOL:
            rejected_lambda += 1
            continue
        if find_theta(Graph(n, candidate), spec) is not None:
            rejected_theta += 1
            continue

        adj = candidate
        matrix = trial
        edge_list = Graph(n, adj).edges()
        lam_cur, x_cur, _, _ = _iterate(matrix, x_new, 1e-9, None, 200_000,
                                        allow_partial=True)
        accepted += 1

    best = Graph(n, adj)
    try:
        best_lambda = spectral_radius(best).lam
    except RuntimeError:
        best_lambda = lam_cur
    return SearchReport(
        m=m,
        spec=spec.as_tuple(),
        seed=seed,
        budget=budget,
        start=tag,
        start_g6=encode_graph6(g0),
        best_g6=encode_graph6(best),
        best_lambda=best_lambda,
        accepted=accepted,
        rejected_theta=rejected_theta,
        rejected_lambda=rejected_lambda,
        rejected_invalid=rejected_invalid,
    )
