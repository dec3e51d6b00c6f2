"""Spectral radius and Perron vectors of adjacency matrices.

The solver is plain power iteration on ``A + I``.  Shifting by the identity
makes the iteration matrix primitive on every connected graph (bipartite
graphs would otherwise oscillate with period two), so convergence from the
all-ones vector is geometric and the limit is the positive Perron vector.

Disconnected graphs are handled per component: the reported radius is the
maximum over components and the vector is supported on a maximising
component (the one with the smallest leading vertex on ties), since no
globally positive eigenvector exists in that case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, _bits

DELTA_TOL = 1e-13
RESIDUAL_FACTOR = 1e-10
MAX_ITERATIONS = 10**6

__all__ = [
    "PerronResult",
    "RotationMove",
    "spectral_radius",
    "rotate_edges",
    "DELTA_TOL",
    "RESIDUAL_FACTOR",
    "MAX_ITERATIONS",
]


@dataclass(frozen=True)
class PerronResult:
    """Spectral radius together with its eigenvector and solve metadata.

    ``x`` has unit Euclidean norm, is strictly positive on ``component`` and
    zero elsewhere; ``u_star`` is the smallest index attaining the maximum
    entry; ``residual`` is the infinity norm of ``A x - lambda x``.
    """

    lam: float
    x: np.ndarray
    component: tuple
    u_star: int
    iterations: int
    residual: float

    def to_json_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "x": [float(v) for v in self.x],
            "u_star": self.u_star,
            "iterations": self.iterations,
            "residual": self.residual,
        }


@dataclass(frozen=True)
class RotationMove:
    """Shift the edges from ``v`` to each vertex of ``moved`` over to ``u``.

    Preconditions in the host graph: ``moved`` is a nonempty subset of
    ``N(v) \\ N(u)`` not containing ``u``.
    """

    u: int
    v: int
    moved: frozenset


def _shifted_matrix(g: Graph) -> np.ndarray:
    m = g.adjacency_matrix()
    m[np.arange(g.n), np.arange(g.n)] += 1.0
    return m


def _iterate(matrix: np.ndarray, start: np.ndarray, delta_tol: float,
             residual_factor, max_iterations: int, allow_partial: bool = False):
    """Power-iterate ``matrix`` (an ``A + I``) from ``start``.

    Returns ``(lam, x, iterations, residual)`` where ``lam`` is the Rayleigh
    estimate of the dominant eigenvalue of ``A``.  With ``allow_partial`` the
    current estimate is returned when the budget runs out instead of raising.
    """
    x = np.asarray(start, dtype=np.float64)
    x = x / math.sqrt(float(x @ x))
    iterations = 0
    while iterations < max_iterations:
        y = matrix @ x
        iterations += 1
        norm = math.sqrt(float(y @ y))
        y /= norm
        delta = float(np.max(np.abs(y - x)))
        x = y
        if delta <= delta_tol:
            z = matrix @ x
            iterations += 1
            mu = float(x @ z)
            residual = float(np.max(np.abs(z - mu * x)))
            lam = mu - 1.0
            if residual_factor is None or residual <= residual_factor * (1.0 + lam):
                return lam, x, iterations, residual
    if allow_partial:
        z = matrix @ x
        mu = float(x @ z)
        residual = float(np.max(np.abs(z - mu * x)))
        return mu - 1.0, x, iterations + 1, residual
    raise RuntimeError(
        f"power iteration did not converge within {max_iterations} iterations; "
        "tolerance settings are likely pathological for this input"
    )


def spectral_radius(g: Graph, *, delta_tol: float = DELTA_TOL,
                    residual_factor: float = RESIDUAL_FACTOR,
                    max_iterations: int = MAX_ITERATIONS) -> PerronResult:
    """Largest adjacency eigenvalue of ``g`` with its Perron vector."""
    if g.n < 1:
        raise ValueError("spectral radius needs at least one vertex")
    masks = g.component_masks()
    if len(masks) == 1:
        matrix = _shifted_matrix(g)
        lam, x, iterations, residual = _iterate(
            matrix, np.ones(g.n), delta_tol, residual_factor, max_iterations)
        u_star = int(np.argmax(x))
        return PerronResult(lam, x, tuple(range(g.n)), u_star, iterations, residual)

    best = None
    total_iterations = 0
    for mask in masks:
        vertices = tuple(_bits(mask))
        sub = g.induced(vertices)
        matrix = _shifted_matrix(sub)
        lam, x, iterations, residual = _iterate(
            matrix, np.ones(sub.n), delta_tol, residual_factor, max_iterations)
        total_iterations += iterations
        if best is None or lam > best[0] + 1e-12:
            best = (lam, x, vertices, residual)
    lam, x_local, vertices, residual = best
    x = np.zeros(g.n)
    for i, v in enumerate(vertices):
        x[v] = x_local[i]
    u_star = int(np.argmax(x))
    return PerronResult(lam, x, vertices, u_star, total_iterations, residual)


def rotate_edges(g: Graph, move: RotationMove) -> Graph:
    """Apply an edge rotation: replace each edge ``v s`` (s in ``moved``)
    by ``u s``.  The edge count is preserved and the result is simple."""
    u, v = move.u, move.v
    if not (0 <= u < g.n and 0 <= v < g.n) or u == v:
        raise ValueError("rotation endpoints must be distinct vertices of the graph")
    if not move.moved:
        raise ValueError("rotation must move at least one edge")
    for s in move.moved:
        if s == u:
            raise ValueError("cannot rotate an edge onto its own target")
        if not g.has_edge(v, s):
            raise ValueError(f"vertex {s} is not a neighbour of {v}")
        if g.has_edge(u, s):
            raise ValueError(f"vertex {s} is already a neighbour of {u}")
    rows = list(g.adj)
    for s in move.moved:
        rows[v] &= ~(1 << s)
        rows[s] &= ~(1 << v)
        rows[u] |= 1 << s
        rows[s] |= 1 << u
    return Graph(g.n, rows)
