"""Shared test utilities: seeded random structures and templates."""

import itertools
import random

from hereditary.structures import Signature, Structure

DIGRAPH_SIG = Signature([("E", 2)])
TRIPLES_SIG = Signature([("E", 3)])


def random_structure(signature, n, rng, density=0.5):
    """A uniformly random labeled structure (not necessarily a member)."""
    rels = {}
    for name, arity in signature.relations:
        tuples = []
        for t in itertools.product(range(1, n + 1), repeat=arity):
            if rng.random() < density:
                tuples.append(t)
        rels[name] = tuples
    return Structure(signature, n, rels)


def random_permuted(M, rng):
    """An isomorphic copy of M under a random relabeling."""
    perm = list(M.domain())
    rng.shuffle(perm)
    mapping = {i + 1: perm[i] for i in range(M.n)}
    rels = {name: [tuple(mapping[x] for x in t) for t in ts]
            for name, ts in M.relations.items()}
    return Structure(M.signature, M.n, rels)


def seeded(seed):
    return random.Random(seed)
