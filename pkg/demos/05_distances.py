"""Structure distances: the r-subset disagreement pseudometric, the
collapsed-relation distance d, the bound between them, and the constructive
transfer of a full subpattern between nearby templates.
"""

import random

from hereditary.distances import (ac_distance, dist, distance_bound_check,
                                  template_dist, transfer_subpattern)
from hereditary.extremal import search_extremal
from hereditary.instances import digraphs
from hereditary.structures import Structure
from hereditary.templates import template_from_structure

sig = digraphs.SIG
rng = random.Random(7)


def random_digraph(n):
    arcs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)
            if rng.random() < 0.4]
    return Structure(sig, n, {"E": arcs})


M, N = random_digraph(5), random_digraph(5)
print("two random digraphs on 5 points:")
print("  dist(M, N) =", dist(M, N))
print("  d(M, N)    =", ac_distance(M, N))
rep = distance_bound_check(M, N)
print("  bound dist <= (r!)^2 2^r d:", rep["dist"], "<=", rep["bound_rhs"],
      "->", rep["holds"])

H = digraphs.digraph_instance(2)
G = Structure(sig, 4, {"E": [(1, 2), (2, 3), (3, 4), (4, 1)]})
C = template_from_structure(H, G)
D = search_extremal(H, 4).extremal_templates[0]
print("\ntransfer: G is a full subpattern of its own template C;")
print("move it onto an extremal H-random template D.")
print("  template_dist(C, D) =", template_dist(C, D))
G2 = transfer_subpattern(C, G, D)
print("  dist(G, G') =", dist(G, G2), "(within the guarantee)")
print("  G' arcs:", sorted(G2.relations.get("E", ())))
