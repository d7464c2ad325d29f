"""Hypothesis property tests for the core invariants."""

import itertools

from hypothesis import given, settings, strategies as st

from hereditary.diagrams import is_satisfiable, type_diagram, witness_structure
from hereditary.distances import ac_distance, dist, distance_bound_check
from hereditary.instances import digraphs, metric
from hereditary.properties import is_member
from hereditary.qftypes import qftp
from hereditary.structures import Structure, induced_substructure, is_isomorphic
from hereditary.templates import (Template, choice_count, is_error_free,
                                  r_subsets, restrict, sub_count)

from helpers import DIGRAPH_SIG


ARCS = [(a, b) for a in range(1, 5) for b in range(1, 5)]


@st.composite
def digraph4(draw):
    mask = draw(st.integers(min_value=0, max_value=(1 << 16) - 1))
    chosen = [ARCS[i] for i in range(16) if (mask >> i) & 1]
    return Structure(DIGRAPH_SIG, 4, {"E": chosen})


@st.composite
def permutation4(draw):
    return draw(st.permutations(range(1, 5)))


def relabel(M, perm):
    mapping = {i + 1: perm[i] for i in range(M.n)}
    return Structure(M.signature, M.n,
                     {name: [tuple(mapping[x] for x in t) for t in ts]
                      for name, ts in M.relations.items()})


@settings(max_examples=60, deadline=None)
@given(digraph4(), permutation4())
def test_isomorphism_invariant_under_relabeling(M, perm):
    assert is_isomorphic(M, relabel(M, perm))


@settings(max_examples=60, deadline=None)
@given(digraph4())
def test_type_diagram_witness_round_trip(M):
    sigma = type_diagram(M)
    assert is_satisfiable(sigma)
    assert type_diagram(witness_structure(sigma)) == sigma


@settings(max_examples=60, deadline=None)
@given(digraph4())
def test_diagram_matches_induced_substructure(M):
    for A in itertools.combinations(range(1, 5), 2):
        sub = induced_substructure(M, A)
        assert qftp(M, A) == qftp(sub, (1, 2))


@settings(max_examples=40, deadline=None)
@given(digraph4(), digraph4(), digraph4())
def test_dist_is_a_pseudometric(M, N, P):
    assert dist(M, M) == 0
    assert dist(M, N) == dist(N, M)
    assert dist(M, P) <= dist(M, N) + dist(N, P)


@settings(max_examples=40, deadline=None)
@given(digraph4(), digraph4())
def test_distance_bound_property(M, N):
    assert distance_bound_check(M, N)["holds"]
    assert ac_distance(M, N) == ac_distance(N, M)


@settings(max_examples=40, deadline=None)
@given(digraph4())
def test_membership_is_hereditary(M):
    H = digraphs.digraph_instance(2)
    if not is_member(H, M):
        return
    for m in (1, 2, 3):
        for A in itertools.combinations(range(1, 5), m):
            assert is_member(H, induced_substructure(M, A))


DTYPES = [metric.distance_type(3, i) for i in (1, 2, 3)]
CHOICE_SETS = [frozenset(c) for m in (1, 2, 3)
               for c in itertools.combinations(DTYPES, m)]


@st.composite
def metric_template4(draw):
    subsets = r_subsets(4, 2)
    sets = [draw(st.sampled_from(CHOICE_SETS)) for _ in subsets]
    return Template(metric.metric_instance(3), 4, dict(zip(subsets, sets)))


@settings(max_examples=40, deadline=None)
@given(metric_template4())
def test_sub_bounded_by_choice_count(T):
    value, error_free = sub_count(T)
    assert value <= choice_count(T)
    assert error_free == is_error_free(T)
    if error_free:
        assert value == choice_count(T)


@settings(max_examples=30, deadline=None)
@given(metric_template4())
def test_restriction_commutes_with_counts(T):
    S = restrict(T, (1, 2, 4))
    assert S.is_complete()
    expected = 1
    for A in ((1, 2), (1, 4), (2, 4)):
        expected *= len(T.choices[A])
    assert choice_count(S) == expected
