"""Near-extremal templates and the stability probe: does getting close to
ex(n) in subpattern count force being close to an extremal template?
"""

from hereditary.extremal import near_extremal_set, stability_probe
from hereditary.instances import metric

print("metric r=4, n=4, epsilon=0.05 (stable at this scale):")
probe = stability_probe(metric.metric_instance(4), 4, "0.05")
print("  near-extremal templates: %d" % len(probe.near_extremal))
print("  worst distance to the extremal set: %s" % probe.worst_gap)

print("\nmetric r=3, n=4, epsilon=0.17 (instability witness appears):")
H = metric.metric_instance(3)
probe = stability_probe(H, 4, "0.17")
print("  near-extremal templates: %d" % len(probe.near_extremal))
print("  worst distance to the extremal set: %s" % probe.worst_gap)
worst = max(probe.near_extremal, key=lambda row: row[2])
T, value, gap = worst
print("  a witness at gap %s: sub=%d, image %s"
      % (gap, value, {A: sorted(c) for A, c in metric.psi(T).items()}))

near, report = near_extremal_set(H, 4, "0.17")
print("  threshold check: ex=%d, smallest qualifying sub=%d"
      % (report.ex, min(v for _, v in near)))
