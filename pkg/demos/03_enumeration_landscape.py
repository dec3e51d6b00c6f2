"""Exhaustive certification at small edge counts.

Connected graphs are generated one representative per isomorphism class,
level by level in the edge count.  Filtering to theta(1,3,3)-free members
and maximising the spectral radius maps out where the clique-join bound
(1 + sqrt(4m - 3))/2 starts to fail: small cliques beat it long before the
large-m regime where the book graph takes over.
"""

from stlab import (
    connected_graphs,
    count_theta_free,
    encode_graph6,
    landscape_table,
    spectral_radius,
    verify_class,
)

# -- raw enumeration -------------------------------------------------------------

print("connected graphs by edge count (one per isomorphism class):")
for m in range(1, 9):
    print("  m=%d: %d classes" % (m, sum(1 for _ in connected_graphs(m))))
print()

print("the three classes at m = 3:",
      " ".join(encode_graph6(g) for g in connected_graphs(3)))
total, free = count_theta_free(7, (1, 3, 3))
print("at m = 7, %d of %d classes avoid theta(1,3,3)" % (free, total))
print("(the lone container is the pattern itself: it has exactly 7 edges)")
print()

# -- the landscape ----------------------------------------------------------------

print("small-m landscape for the (1,3,3) pattern:")
print(landscape_table(9, (1, 3, 3)))
print()

report = verify_class(7, (1, 3, 3))
print("m=7 in detail: bound %.6f, best pattern-free radius %.6f, attained by %s"
      % (report.bound, report.max_lambda, [g6 for g6, _ in report.argmax]))
print("counterexamples above the bound:", len(report.counterexamples))
print()
report10 = verify_class(10, (1, 3, 3))
print("m=10: max radius %.6f vs bound %.6f; K_5 (too small to host the"
      % (report10.max_lambda, report10.bound))
print("pattern) sits in the argmax:", [g6 for g6, _ in report10.argmax])
print()
for note in report.notes:
    print("note:", note)
