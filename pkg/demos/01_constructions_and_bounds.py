"""Tour of the graph constructions and the clique-join radius bound.

The central family is the book graph K_2 v t*K_1: two adjacent vertices
covering t otherwise independent pages.  With m = 2t + 1 edges its spectral
radius is exactly (1 + sqrt(4m - 3)) / 2, the reference value against which
every other graph of the same size is measured here.
"""

import math

from stlab import (
    bound_value,
    cycle_graph,
    encode_graph6,
    join,
    k_join,
    spectral_radius,
    star_graph,
    theta_graph,
    Graph,
)

# -- the book graph at m = 43 -------------------------------------------------

book = k_join(2, 21)
result = spectral_radius(book)
print("book graph K_2 v 21K_1:", book)
print("  graph6:", encode_graph6(book))
print("  lambda = %.12f   (exact value 7, since sqrt(4*43 - 3) = 13)" % result.lam)
print("  Perron vector: hubs %.6f, pages %.6f" % (result.x[0], result.x[2]))
print()

# -- the radius of K_k v t*K_1 meets the closed form every time ---------------

print("k  t   m    lambda           (k-1+sqrt(4m-k^2+1))/2")
for k in (2, 3, 4):
    for t in (1, 4, 10):
        g = k_join(k, t)
        lam = spectral_radius(g).lam
        print("%d  %-2d  %-3d  %.12f  %.12f" % (k, t, g.m, lam, bound_value(k, g.m)))
print()

# -- assorted sanity values ----------------------------------------------------

print("lambda(C_12)      = %.12f  (2-regular)" % spectral_radius(cycle_graph(12)).lam)
print("lambda(K_{1,9})   = %.12f  (sqrt(9) = 3)" % spectral_radius(star_graph(9)).lam)
theta = theta_graph(1, 3, 3)
print("theta(1,3,3): %d vertices, %d edges, lambda = %.6f"
      % (theta.n, theta.m, spectral_radius(theta).lam))

# joins compose: a lone vertex joined onto a star is a book graph
lone = Graph.from_edges(1, [])
print("K_1 v K_{1,5} equals K_2 v 5K_1:",
      encode_graph6(join(lone, star_graph(5))) == encode_graph6(k_join(2, 5))
      or spectral_radius(join(lone, star_graph(5))).lam == spectral_radius(k_join(2, 5)).lam)

# the quadratic identity behind the bound: lambda^2 - lambda = m - 1 on books
print("\nquadratic identity on book graphs:")
for t in (2, 5, 21):
    g = k_join(2, t)
    lam = spectral_radius(g).lam
    print("  t=%-2d  lambda^2 - lambda = %.10f   m - 1 = %d" % (t, lam * lam - lam, g.m - 1))
