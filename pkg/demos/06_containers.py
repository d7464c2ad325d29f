"""The containers hypergraph: vertices are located realized types, edges are
bad k-diagrams, independent sets capture exactly the members.
"""

from hereditary.containers import (build_hypergraph, codegree_function,
                                   exponent_m, independence_check,
                                   suggested_tau)
from hereditary.instances import digraphs
from hereditary.structures import Structure

H = digraphs.digraph_instance(2)
Hg = build_hypergraph(H, 3, 4)
print("T_3-free digraphs, k=3, n=4:")
print("  vertices: %d   edges: %d   uniformity s=%d"
      % (Hg.num_vertices(), Hg.num_edges(), Hg.s))
print("  average degree:", Hg.average_degree())

tau = "1/4"
rep = codegree_function(Hg, tau, epsilon="1/10")
print("\nco-degree data at tau=%s:" % tau)
for j in sorted(rep.delta_j):
    print("  delta_%d = %s" % (j, rep.delta_j[j]))
print("  delta =", rep.delta)
print("  hypothesis threshold =", rep.threshold,
      "met:" if rep.threshold_met else "not met:", rep.threshold_met)
print("  suggested tau(gamma=2):", suggested_tau(4, 3, 2, 2))

print("\nexponent m(k,r):")
for k, r in ((3, 2), (4, 2), (5, 3)):
    print("  m(%d,%d) = %s" % (k, r, exponent_m(k, r)))

member = Structure(digraphs.SIG, 4, {"E": [(1, 2), (1, 3), (1, 4)]})
bad = Structure(digraphs.SIG, 4, {"E": [(1, 2), (2, 3), (1, 3)]})
ok, _ = independence_check(Hg, member)
fail, edge = independence_check(Hg, bad)
print("\nindependence of Diag^tp(M):")
print("  out-star (a member): independent =", ok)
print("  transitive triangle (non-member): independent =", fail,
      "| witnessing edge has %d vertices" % len(edge))
