"""Metric spaces with distances in {1..r} as relational structures.

Signature: binary relations R1..Rr, one per distance value. Members are
the finite metric spaces: every pair carries exactly one symmetric
distance, no loops, and every triangle satisfies the triangle inequality.
"""

import itertools
from functools import lru_cache

from ..errors import InvalidArgument
from ..properties import (INDUCED, NON_INDUCED, ForbiddenEntry,
                          HereditaryProperty)
from ..qftypes import QfType, atoms
from ..structures import Signature, Structure, is_isomorphic
from ..templates import Template


@lru_cache(maxsize=None)
def signature(r):
    return Signature([("R%d" % i, 2) for i in range(1, r + 1)])


def triangle_ok(i, j, k):
    """|i-j| <= k <= i+j, symmetric in all three arguments."""
    i, j, k = sorted((i, j, k))
    return k <= i + j


def m_value(r):
    """Size of an optimal distance block: m(r) = floor(r/2) + 1."""
    return r // 2 + 1


def _loop_entries(r):
    out = []
    for i in range(1, r + 1):
        sig = Signature([("R%d" % i, 2)])
        out.append(ForbiddenEntry(
            Structure(sig, 1, {"R%d" % i: [(1, 1)]}), NON_INDUCED))
    return out


def _bad_pair_entries(r):
    """Loop-free 2-point structures that are not a single symmetric distance."""
    sig = signature(r)
    facts = [("R%d" % i, t) for i in range(1, r + 1)
             for t in ((1, 2), (2, 1))]
    good = set()
    for i in range(1, r + 1):
        good.add(frozenset((("R%d" % i, (1, 2)), ("R%d" % i, (2, 1)))))
    reps = []
    for mask in range(1 << len(facts)):
        chosen = frozenset(facts[j] for j in range(len(facts)) if (mask >> j) & 1)
        if chosen in good:
            continue
        rels = {}
        for name, t in chosen:
            rels.setdefault(name, []).append(t)
        M = Structure(sig, 2, rels)
        if not any(is_isomorphic(M, rep) for rep in reps):
            reps.append(M)
    return [ForbiddenEntry(M, INDUCED) for M in reps]


def _violating_triangles(r):
    sig = signature(r)
    reps = []
    for i, j, k in itertools.combinations_with_replacement(range(1, r + 1), 3):
        if triangle_ok(i, j, k):
            continue
        rels = {}
        for (a, b), d in ((((1, 2)), i), (((1, 3)), j), (((2, 3)), k)):
            rels.setdefault("R%d" % d, []).extend([(a, b), (b, a)])
        reps.append(Structure(sig, 3, rels))
    return [ForbiddenEntry(M, INDUCED) for M in reps]


def forbidden_entries(r):
    """The full universe+triangle family, reusable over larger signatures."""
    return _loop_entries(r) + _bad_pair_entries(r) + _violating_triangles(r)


@lru_cache(maxsize=None)
def metric_instance(r):
    if r < 3:
        raise InvalidArgument("need r >= 3")
    return HereditaryProperty(signature(r), forbidden_entries(r),
                              mode=INDUCED, name="metric-r%d" % r)


@lru_cache(maxsize=None)
def distance_type(r, i):
    """The pair type asserting distance i."""
    sig = signature(r)
    facts = []
    for name, varmap in atoms(sig):
        facts.append(name == "R%d" % i and set(varmap) == {1, 2})
    return QfType(sig, facts)


def type_to_distance(p):
    for i in range(1, len(p.signature.relations) + 1):
        if p.fact("R%d" % i, (1, 2)):
            return i
    raise InvalidArgument("type asserts no distance")


def psi(T):
    """The set-graph of a template: pair -> set of distance values."""
    return {A: frozenset(type_to_distance(p) for p in T.choices[A])
            for A in T.subsets}


def psi_inverse(r, n, setgraph):
    """Template from a complete set-graph."""
    H = metric_instance(r)
    choices = {}
    for A, values in setgraph.items():
        if not values:
            raise InvalidArgument("set-graph must be complete")
        choices[tuple(sorted(A))] = {distance_type(r, i) for i in values}
    return Template(H, n, choices)


def metric_space(r, n, dist_map):
    """A metric structure from {pair: distance}."""
    rels = {}
    for (a, b), d in dist_map.items():
        rels.setdefault("R%d" % d, []).extend([(a, b), (b, a)])
    return Structure(signature(r), n, rels)


def maximum_matchings(n):
    """All sets of floor(n/2) disjoint pairs of [n], deterministic order."""
    def rec(remaining):
        if len(remaining) < 2:
            return [frozenset()]
        first = remaining[0]
        out = []
        for other in remaining[1:]:
            rest = [x for x in remaining[1:] if x != other]
            for m in rec(rest):
                out.append(m | {(first, other)})
        if len(remaining) % 2 == 1:
            # odd leftover: the first element may be the unmatched one
            out.extend(rec(remaining[1:]))
        return out
    return sorted(set(rec(list(range(1, n + 1)))), key=sorted)


def extremal_family(r, n):
    """Generators for the extremal set-graphs.

    Even r: the unique constant set-graph with block {r/2..r}. Odd r: one
    set-graph per maximum matching; matched pairs carry {m-1..r}, the rest
    {m..r}, with m = m(r).
    """
    m = m_value(r)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    if r % 2 == 0:
        block = frozenset(range(r // 2, r + 1))
        return [{A: block for A in pairs}]
    low = frozenset(range(m - 1, r + 1))
    high = frozenset(range(m, r + 1))
    out = []
    for matching in maximum_matchings(n):
        matched = {tuple(sorted(p)) for p in matching}
        out.append({A: (low if A in matched else high) for A in pairs})
    return out


def metric_extremal_oracle(r, n):
    """Closed-form ex(n) plus the extremal set-graph family."""
    if r < 3 or n < 2:
        raise InvalidArgument("need r >= 3 and n >= 2")
    from math import comb
    m = m_value(r)
    if r % 2 == 0:
        value = m ** comb(n, 2)
    else:
        value = m ** comb(n, 2) * (m + 1) ** (n // 2) // m ** (n // 2)
    return value, extremal_family(r, n)


def all_low_template(r, n):
    """The constant {1..m(r)} template (odd case no-stability witness)."""
    m = m_value(r)
    pairs = itertools.combinations(range(1, n + 1), 2)
    return psi_inverse(r, n, {A: frozenset(range(1, m + 1)) for A in pairs})


@lru_cache(maxsize=None)
def _compatible_triple_table(r):
    """For candidate distance sets A,B,C: every cross choice metric."""
    sets = [frozenset(c) for size in range(r, 0, -1)
            for c in itertools.combinations(range(1, r + 1), size)]
    table = {}
    for A in sets:
        for B in sets:
            for C in sets:
                table[(A, B, C)] = all(
                    triangle_ok(a, b, c) for a in A for b in B for c in C)
    return sets, table


def restricted_search(r, n):
    """Independent product search over complete set-graphs.

    Returns (max product, list of maximizer set-graphs). No template
    machinery is involved; serves as the oracle cross-check and as the
    restricted path for larger r.
    """
    sets, table = _compatible_triple_table(r)
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    pair_index = {A: i for i, A in enumerate(pairs)}
    triangles = []
    for i, A in enumerate(pairs):
        tri = []
        for x, y, z in itertools.combinations(range(1, n + 1), 3):
            e1, e2, e3 = (x, y), (x, z), (y, z)
            if max(pair_index[e] for e in (e1, e2, e3)) == i:
                tri.append((pair_index[e1], pair_index[e2], pair_index[e3]))
        triangles.append(tri)
    best = [0]
    winners = []
    assignment = [None] * len(pairs)

    def rec(i, product):
        if i == len(pairs):
            if product > best[0]:
                best[0] = product
                winners.clear()
            if product == best[0]:
                winners.append({A: assignment[j] for j, A in enumerate(pairs)})
            return
        for S in sets:
            bound = product * len(S) * (r ** (len(pairs) - i - 1))
            if bound < best[0]:
                continue
            assignment[i] = S
            if all(table[(assignment[a], assignment[b], assignment[c])]
                   for (a, b, c) in triangles[i]):
                rec(i + 1, product * len(S))
        assignment[i] = None

    rec(0, 1)
    return best[0], winners


def check_multigraph_bound(weights, n, a):
    """Classify a multigraph as a (3,3a)- or (3,3a+1)-graph and check the
    corresponding product bound, with equality-case membership."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    w = {tuple(sorted(A)): weights[tuple(sorted(A))] for A in pairs}
    max_triple = max(w[(x, y)] + w[(x, z)] + w[(y, z)]
                     for x, y, z in itertools.combinations(range(1, n + 1), 3))
    product = 1
    for A in pairs:
        product *= w[A]
    report = {"product": product, "max_triple_sum": max_triple}
    if max_triple <= 3 * a:
        bound = a ** len(pairs)
        report.update(kind="(3,%d)" % (3 * a), bound=bound,
                      holds=product <= bound,
                      equality_case=all(w[A] == a for A in pairs))
    elif max_triple <= 3 * a + 1:
        bound = a ** len(pairs) * (a + 1) ** (n // 2) // a ** (n // 2)
        matched = is_u2(w, n, a)
        report.update(kind="(3,%d)" % (3 * a + 1), bound=bound,
                      holds=product <= bound, equality_case=matched)
    else:
        report.update(kind="neither", bound=None, holds=None,
                      equality_case=False)
    return report


def is_u2(w, n, a):
    """Weights a everywhere except a+1 on a maximum matching."""
    heavy = [A for A in w if w[A] == a + 1]
    if any(w[A] not in (a, a + 1) for A in w):
        return False
    if len(heavy) != n // 2:
        return False
    used = set()
    for x, y in heavy:
        if x in used or y in used:
            return False
        used.update((x, y))
    return True
