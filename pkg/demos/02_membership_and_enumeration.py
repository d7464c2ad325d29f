"""Hereditary properties as finite forbidden families: membership tests,
labeled enumeration of H_n, and the closure at a fixed size.
"""

from hereditary.instances import digraphs, metric, triples
from hereditary.properties import closure, count_members, is_member

Hd = digraphs.digraph_instance(2)
print("T_3-free digraphs (loop-free, digons only on 2 points):")
for n in (1, 2, 3, 4):
    print("  |H_%d| = %d" % (n, count_members(Hd, n)))

print("\nclosure at size 3: %d non-members up to isomorphism"
      % len(closure(Hd, 3)))

Hm = metric.metric_instance(3)
good = metric.metric_space(3, 3, {(1, 2): 1, (1, 3): 1, (2, 3): 2})
bad = metric.metric_space(3, 3, {(1, 2): 1, (1, 3): 1, (2, 3): 3})
print("\nmetric spaces with distances in {1,2,3}:")
print("  1-1-2 triangle is a member:", is_member(Hm, good))
print("  1-1-3 triangle is a member:", is_member(Hm, bad))
print("  |H_2| = %d, |H_3| = %d" % (count_members(Hm, 2),
                                    count_members(Hm, 3)))

Ht = triples.triples_instance()
print("\ncancellative triple systems:")
for n in (3, 4, 5):
    print("  |H_%d| = %d" % (n, count_members(Ht, n)))
