"""Triangle-free 3-uniform hypergraphs (cancellative triple systems).

Members are 3-graphs (one ternary relation holding the full permutation
orbit of each edge, no repeated-entry facts) with no pair of edges A, B
sharing two vertices whose symmetric difference lies inside a third edge.
That family has two minimal patterns: the degenerate one on 4 vertices
({123,124,134}) and the 5-vertex one ({123,124,345}).
"""

import itertools
from functools import lru_cache
from math import comb

from ..properties import (INDUCED, NON_INDUCED, ForbiddenEntry,
                          HereditaryProperty)
from ..qftypes import QfType, atoms
from ..structures import Signature, Structure, is_isomorphic
from ..templates import Template

SIG = Signature([("E", 3)])


def hypergraph(n, edges):
    """Structure from a set of 3-element edges (full permutation orbits)."""
    tuples = []
    for e in edges:
        tuples.extend(itertools.permutations(e))
    return Structure(SIG, n, {"E": tuples})


def _loop_entries():
    reps = [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)]
    out = []
    for t in reps:
        size = max(t)
        out.append(ForbiddenEntry(Structure(SIG, size, {"E": [t]}),
                                  NON_INDUCED))
    return out


def _asymmetry_entries():
    """3-point structures whose edge orbit is a proper nonempty subset."""
    perms = list(itertools.permutations((1, 2, 3)))
    reps = []
    for mask in range(1, (1 << 6) - 1):
        chosen = [perms[i] for i in range(6) if (mask >> i) & 1]
        M = Structure(SIG, 3, {"E": chosen})
        if not any(is_isomorphic(M, rep) for rep in reps):
            reps.append(M)
    return [ForbiddenEntry(M, INDUCED) for M in reps]


def triangle_patterns():
    return [hypergraph(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4)]),
            hypergraph(5, [(1, 2, 3), (1, 2, 4), (3, 4, 5)])]


@lru_cache(maxsize=None)
def triples_instance():
    entries = _loop_entries() + _asymmetry_entries()
    entries += [ForbiddenEntry(F, NON_INDUCED) for F in triangle_patterns()]
    return HereditaryProperty(SIG, entries, mode=NON_INDUCED, name="triples")


def _triple_type(present):
    facts = []
    for name, varmap in atoms(SIG):
        facts.append(present and len(set(varmap)) == 3)
    return QfType(SIG, facts)


P1 = _triple_type(True)   # the full edge orbit
P2 = _triple_type(False)  # no edge


def psi(T):
    """Edge set of the image 3-graph: triples whose choice set has P1."""
    return {A for A in T.subsets if P1 in T.choices[A]}


def psi_inverse(n, edges):
    """Downward-closed template of a 3-graph: P2 everywhere, P1 on edges."""
    H = triples_instance()
    choices = {}
    for A in itertools.combinations(range(1, n + 1), 3):
        ch = {P2}
        if tuple(sorted(A)) in {tuple(sorted(e)) for e in edges}:
            ch.add(P1)
        choices[A] = ch
    return Template(H, n, choices)


def downward_close(T):
    """G*: add the empty type everywhere; gains a factor 2 per changed
    triple while preserving membership of all merges."""
    choices = {A: set(ch) | {P2} for A, ch in T.choices.items()}
    return Template(T.property, T.n, choices)


def e_of_n(n):
    return (n // 3) * ((n + 1) // 3) * ((n + 2) // 3)


def balanced_tripartitions(n):
    """Partitions of [n] into 3 balanced (possibly empty) parts."""
    sizes = sorted((n // 3, (n + 1) // 3, (n + 2) // 3))
    canonical = set()
    elements = list(range(1, n + 1))
    for p1 in itertools.combinations(elements, sizes[0]):
        rest1 = [x for x in elements if x not in p1]
        for p2 in itertools.combinations(rest1, sizes[1]):
            p3 = tuple(x for x in rest1 if x not in p2)
            canonical.add(tuple(sorted((tuple(sorted(p1)), tuple(sorted(p2)),
                                        tuple(sorted(p3))))))
    return sorted(canonical)


def tripartite_family(n):
    """Extremal images: crossing triples of a balanced tripartition."""
    out = []
    for parts in balanced_tripartitions(n):
        part_of = {}
        for idx, p in enumerate(parts):
            for x in p:
                part_of[x] = idx
        edges = {A for A in itertools.combinations(range(1, n + 1), 3)
                 if len({part_of[x] for x in A}) == 3}
        out.append(frozenset(edges))
    return out


def triples_extremal_oracle(n):
    """ex = 2^e(n); extremal images are the balanced tripartite 3-graphs."""
    return 2 ** e_of_n(n), tripartite_family(n)
