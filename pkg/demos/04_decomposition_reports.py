"""Decomposing a graph around its extremal vertex.

Write u* for a vertex with the largest Perron entry.  Splitting the rest of
the graph into the neighbourhood of u* and everything outside yields an
exact edge identity, two eigen-identities, and a collection of structural
quantities (branch weights per neighbourhood component, outside edge
budget) that govern how large the spectral radius can be at a fixed edge
count.  The book graph realises the tight configuration.
"""

import json
import random

from stlab import cycle_graph, inspect, k_join, random_connected_graph

# -- the book graph: the equality configuration ------------------------------------

report = inspect(k_join(2, 21))
print("book graph K_2 v 21K_1 around its extremal vertex:")
print("  lambda^2 - lambda = %.10f  (= m - 1 = 42 exactly in the tight case)"
      % (report.lam ** 2 - report.lam))
print("  outside vertices:", report.outside, " outside edges:", report.edges_outside)
print("  neighbourhood components: %d (trees: %d)"
      % (len(report.neighborhood_components), report.tree_component_count))
print("  isolated neighbours:", report.neighbors_isolated)
print("  branch weight total %.6f vs floor %.6f (met with equality)"
      % (report.branch_weight_total, report.branch_weight_floor))
print()

# -- a plain cycle -------------------------------------------------------------------

five = inspect(cycle_graph(5))
print("C_5: neighbourhood size %d, outside size %d, outside edges %d,"
      % (len(five.neighbors), len(five.outside), five.edges_outside))
print("     cross edges %d, edge identity gap %d (always exact)"
      % (five.edges_neighborhood_outside, five.identity_gap))
print()

# -- random spot checks ---------------------------------------------------------------

rng = random.Random(4)
print("edge identity and eigen identities on random connected graphs:")
for _ in range(5):
    n = rng.randint(5, 12)
    m = rng.randint(n - 1, n * (n - 1) // 2)
    g = random_connected_graph(n, m, rng)
    r = inspect(g)
    print("  n=%-2d m=%-2d  identity_gap=%d  eig1_gap=%.2e  eig2_gap=%.2e"
          % (n, m, r.identity_gap, r.eig1_gap, r.eig2_gap))
print()

# reports serialise to JSON for scripted pipelines
print("JSON keys:", sorted(json.loads(json.dumps(five.to_json_dict())).keys()))
