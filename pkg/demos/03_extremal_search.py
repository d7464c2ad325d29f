"""Brute-force extremal numbers ex(n) over H-random templates, checked
against the closed-form oracles, plus the density sequence b_n.
"""

from hereditary.extremal import density_sequence, search_extremal
from hereditary.instances import digraphs, metric, triples

print("digraphs, no transitive 3-tournament:")
for n in (3, 4):
    rep = search_extremal(digraphs.digraph_instance(2), n)
    oracle = digraphs.digraph_extremal_oracle(2, n)[0]
    print("  n=%d search ex=%d oracle=%d maximizers=%d"
          % (n, rep.ex, oracle, len(rep.extremal_templates)))

print("\nmetric spaces, distances {1,2,3} (odd case, matchings matter):")
for n in (3, 4):
    rep = search_extremal(metric.metric_instance(3), n)
    oracle = metric.metric_extremal_oracle(3, n)[0]
    print("  n=%d search ex=%d oracle=%d maximizers=%d"
          % (n, rep.ex, oracle, len(rep.extremal_templates)))
    for T in rep.extremal_templates:
        print("    image:", {A: sorted(c) for A, c in metric.psi(T).items()})

print("\ncancellative triples:")
for n in (3, 4, 5):
    rep = search_extremal(triples.triples_instance(), n)
    print("  n=%d ex=%d (oracle %d)" % (n, rep.ex,
                                        triples.triples_extremal_oracle(n)[0]))

print("\ndensity sequence b_n = ex(n)^(1/C(n,r)) for the digraph property:")
for rep in density_sequence(digraphs.digraph_instance(2), 4):
    print("  n=%d ex=%d b_n=%.6f" % (rep.n, rep.ex, rep.b_n))
