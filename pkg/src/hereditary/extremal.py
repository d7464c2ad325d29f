"""Extremal search over H-random templates, density sequence, stability.

The search assigns choice sets to r-subsets in colexicographic order with
(a) candidate sets drawn from the realized type space, (b) a partial-product
upper bound against the incumbent, (c) incremental membership checks on
every newly completed block of size <= k, and (d) an incremental error scan
for mixed-arity signatures.
"""

import itertools
import math
from fractions import Fraction

from .diagrams import LocatedType, merge_entries
from .errors import BudgetExceeded, InvalidArgument
from .properties import realized_type_space
from .templates import (Template, _BlockChecker, r_subsets, sub_count,
                        has_subarity_relations)

DEFAULT_NODE_BUDGET = 10 ** 8
DEFAULT_CAP = 10 ** 4
MAX_TYPES_FOR_SEARCH = 12


class ExtremalReport(object):
    def __init__(self, n, ex, extremal_templates, r, stats, exact=True,
                 truncated=False):
        self.n = n
        self.ex = ex
        self.extremal_templates = extremal_templates
        self.r = r
        self.stats = stats
        self.exact = exact
        self.truncated = truncated

    @property
    def b_n(self):
        """ex^(1/C(n,r)) as a float; the exact pair is (ex, C(n,r))."""
        if self.ex <= 0:
            return 0.0
        return math.exp(math.log(self.ex) / math.comb(self.n, self.r))

    def exact_pair(self):
        return (self.ex, math.comb(self.n, self.r))

    def __repr__(self):
        return ("ExtremalReport(n=%d, ex=%d, maximizers=%d, exact=%s)"
                % (self.n, self.ex, len(self.extremal_templates), self.exact))


class StabilityProbe(object):
    def __init__(self, n, epsilon, near_extremal, worst_gap):
        self.n = n
        self.epsilon = epsilon
        self.near_extremal = near_extremal  # list of (template, sub, min_dist)
        self.worst_gap = worst_gap

    def __repr__(self):
        return "StabilityProbe(n=%d, eps=%s, worst_gap=%s)" % (
            self.n, self.epsilon, self.worst_gap)


def pow_geq(x, p, y, q):
    """x^p >= y^q for positive integers, float prescreen + exact fallback."""
    if x <= 0:
        return y <= 0
    lhs = p * math.log(x)
    rhs = q * math.log(y)
    if abs(lhs - rhs) > 1e-9 * max(1.0, abs(lhs), abs(rhs)):
        return lhs > rhs
    return x ** p >= y ** q


def candidate_sets(H, limit=1 << 14):
    """All nonempty subsets of S_r(H), largest first, deterministic order."""
    space = realized_type_space(H)
    if len(space) > MAX_TYPES_FOR_SEARCH:
        raise BudgetExceeded(
            "realized type space too large for generic search (%d types)"
            % len(space))
    sets = []
    for m in range(len(space), 0, -1):
        for combo in itertools.combinations(space, m):
            sets.append(frozenset(combo))
    if len(sets) > limit:
        raise BudgetExceeded("too many candidate choice sets")
    return sets


def _completion_schedule(n, r, kk, subsets):
    """For each step i: the blocks (size r+1..kk) whose r-subsets all lie in
    subsets[0..i] and which include subsets[i] as their colex-last subset."""
    index = {A: i for i, A in enumerate(subsets)}
    schedule = [[] for _ in subsets]
    for size in range(r + 1, kk + 1):
        for block in itertools.combinations(range(1, n + 1), size):
            last = max(index[A] for A in itertools.combinations(block, r))
            schedule[last].append(block)
    return schedule


def _error_partners(subsets, r):
    """For each step i: earlier subsets overlapping subsets[i] with union
    size strictly between r and 2r (the error window)."""
    partners = [[] for _ in subsets]
    for i, A in enumerate(subsets):
        for j in range(i):
            u = len(set(A) | set(subsets[j]))
            if r < u < 2 * r:
                partners[i].append(subsets[j])
    return partners


class _SearchEngine(object):
    def __init__(self, H, n, node_budget=DEFAULT_NODE_BUDGET):
        self.H = H
        self.n = n
        self.r = H.signature.r
        self.subsets = r_subsets(n, self.r)
        self.cands = candidate_sets(H)
        self.max_card = max(len(c) for c in self.cands)
        self.kk = min(max(H.k, self.r), n)
        self.schedule = _completion_schedule(n, self.r, self.kk, self.subsets)
        self.mixed = has_subarity_relations(H.signature)
        self.partners = _error_partners(self.subsets, self.r) if self.mixed else None
        self.checker = _BlockChecker(H)
        self.node_budget = node_budget
        self.nodes = 0
        self.pruned = 0
        self._pair_sat_cache = {}

    def _pair_ok(self, A1, s1, A2, s2):
        # no unsatisfiable located pair across the two choice sets
        key = (A1, tuple(sorted(t.facts for t in s1)),
               A2, tuple(sorted(t.facts for t in s2)))
        cached = self._pair_sat_cache.get(key)
        if cached is not None:
            return cached
        ok = True
        for p in s1:
            for q in s2:
                if merge_entries([LocatedType(A1, p), LocatedType(A2, q)]) is None:
                    ok = False
                    break
            if not ok:
                break
        self._pair_sat_cache[key] = ok
        return ok

    def _blocks_ok(self, i, assigned):
        A_i = self.subsets[i]
        if self.mixed:
            for B in self.partners[i]:
                if not self._pair_ok(B, assigned[B], A_i, assigned[A_i]):
                    return False
        for block in self.schedule[i]:
            cmap = {A: assigned[A]
                    for A in itertools.combinations(block, self.r)}
            if not self.checker.block_ok(block, cmap):
                return False
        # size-r validity is structural: candidates are subsets of S_r(H)
        return True

    def run(self, collect, qualifies, lower_bound):
        """Generic DFS.

        collect(template, product): called at every H-random leaf whose
        product passes qualifies(product); lower_bound() returns the current
        pruning floor (leaves with bound < floor are cut).
        """
        subsets = self.subsets
        assigned = {}

        def rec(i, product):
            self.nodes += 1
            if self.nodes > self.node_budget:
                raise BudgetExceeded("search node budget exhausted")
            if i == len(subsets):
                if qualifies(product):
                    collect(dict(assigned), product)
                return
            remaining = len(subsets) - i - 1
            A = subsets[i]
            for cand in self.cands:
                bound = product * len(cand) * self.max_card ** remaining
                floor = lower_bound()
                if floor is not None and bound < floor:
                    self.pruned += 1
                    continue
                assigned[A] = cand
                if self._blocks_ok(i, assigned):
                    rec(i + 1, product * len(cand))
                else:
                    self.pruned += 1
                del assigned[A]

        rec(0, 1)


def search_extremal(H, n, node_budget=DEFAULT_NODE_BUDGET, cap=DEFAULT_CAP):
    """Exact maximization of sub over all H-random templates on {1..n}."""
    if n < H.signature.r:
        raise InvalidArgument("n must be at least r")
    engine = _SearchEngine(H, n, node_budget)
    best = [0]
    maximizers = []
    truncated = [False]

    def collect(assignment, product):
        T = Template(H, n, assignment)
        value, _ = sub_count(T)
        if value > best[0]:
            best[0] = value
            maximizers.clear()
            truncated[0] = False
        if value == best[0]:
            if len(maximizers) < cap:
                maximizers.append(T)
            else:
                truncated[0] = True

    exact = True
    try:
        # the product is an upper bound for sub, so pruning against the
        # incumbent sub value stays admissible even with errors present
        engine.run(collect, lambda product: True, lambda: best[0])
    except BudgetExceeded:
        exact = False
    maximizers.sort(key=lambda T: T.canonical_key())
    stats = {"nodes": engine.nodes, "pruned": engine.pruned}
    return ExtremalReport(n, best[0], maximizers, H.signature.r, stats,
                          exact=exact, truncated=truncated[0])


def density_sequence(H, n_max, node_budget=DEFAULT_NODE_BUDGET):
    """b_n for r <= n <= n_max with exact monotonicity verification."""
    r = H.signature.r
    if n_max < r:
        raise InvalidArgument("n_max must be at least r")
    reports = [search_extremal(H, n, node_budget) for n in range(r, n_max + 1)]
    for rep in reports:
        if not rep.exact:
            raise BudgetExceeded("density sequence incomplete", partial=reports)
    for a, b in zip(reports, reports[1:]):
        # b_n >= b_{n+1}  <=>  ex_n^C(n+1,r) >= ex_{n+1}^C(n,r)
        if not pow_geq(a.ex, math.comb(b.n, r), b.ex, math.comb(a.n, r)):
            raise AssertionError("density sequence not non-increasing")
        if b.ex < 1:
            raise AssertionError("b_n below 1 with nonempty H_n")
    return reports


def near_extremal_set(H, n, epsilon, report=None,
                      node_budget=DEFAULT_NODE_BUDGET, cap=DEFAULT_CAP):
    """All H-random templates with sub >= ex^(1-epsilon), plus the report."""
    report = report or search_extremal(H, n, node_budget)
    if not report.exact:
        raise BudgetExceeded("extremal search was not exact")
    eps = Fraction(epsilon)
    if not 0 <= eps <= 1:
        raise InvalidArgument("epsilon must be in [0,1]")
    frac = 1 - eps
    a, b = frac.numerator, frac.denominator
    ex = report.ex

    def qualifies(value):
        return pow_geq(value, b, ex, a)

    # the smallest integer floor: values below it can never qualify
    floor = 1
    while not qualifies(floor):
        floor += max(1, floor // 8)
    while floor > 1 and qualifies(floor - 1):
        floor -= 1

    engine = _SearchEngine(H, n, node_budget)
    found = []

    def collect(assignment, product):
        T = Template(H, n, assignment)
        value, _ = sub_count(T)
        if qualifies(value) and len(found) < cap:
            found.append((T, value))

    engine.run(collect, qualifies, lambda: floor)
    found.sort(key=lambda pair: (-pair[1], pair[0].canonical_key()))
    return found, report


def stability_probe(H, n, epsilon, node_budget=DEFAULT_NODE_BUDGET):
    """worst_gap = max over near-extremal templates of their min distance
    to the extremal set (template distance, exact rational)."""
    from .distances import template_dist
    near, report = near_extremal_set(H, n, epsilon, node_budget=node_budget)
    rows = []
    worst = Fraction(0)
    for T, value in near:
        gap = min(template_dist(T, E) for E in report.extremal_templates)
        rows.append((T, value, gap))
        worst = max(worst, gap)
    return StabilityProbe(n, Fraction(epsilon), rows, worst)


def e_membership(G, templates):
    """G lies in the E-set spanned by the given templates (full subpattern
    of at least one)."""
    from .templates import is_full_subpattern
    return any(is_full_subpattern(G, T) for T in templates)


def e_delta_membership(G, templates, delta):
    """Constructive check that G is delta-close to a full subpattern of one
    of the given H-random templates (via the transfer construction)."""
    from .distances import transfer_subpattern, dist
    from .templates import template_from_structure
    delta = Fraction(delta)
    for T in templates:
        C = template_from_structure(T.property, G)
        G2 = transfer_subpattern(C, G, T)
        if dist(G, G2) <= delta:
            return True
    return False
