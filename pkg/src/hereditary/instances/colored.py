"""Colored k-uniform set systems: every k-subset carries exactly one color.

Signature: one k-ary relation per color. Members are complete symmetric
colorings avoiding the forbidden value-colorings. The independent density
path works directly on colorings (no template machinery) so the generic
search can be cross-checked against it.
"""

import itertools
from math import comb

from ..errors import InvalidArgument
from ..properties import (INDUCED, NON_INDUCED, ForbiddenEntry,
                          HereditaryProperty)
from ..qftypes import QfType, atoms
from ..structures import Signature, Structure, is_isomorphic
from ..templates import Template


def signature(k, colors):
    return Signature([("c%s" % c, k) for c in colors])


def _repeated_patterns(k):
    """Canonical tuples of length k with a repeated entry."""
    out = []
    for t in itertools.product(range(1, k + 1), repeat=k):
        distinct = []
        for x in t:
            if x not in distinct:
                distinct.append(x)
        if len(distinct) == k:
            continue
        if distinct == list(range(1, len(distinct) + 1)):
            out.append(t)
    return out


def _loop_entries(k, colors):
    out = []
    for c in colors:
        sig = Signature([("c%s" % c, k)])
        for t in _repeated_patterns(k):
            out.append(ForbiddenEntry(
                Structure(sig, max(t), {"c%s" % c: [t]}), NON_INDUCED))
    return out


def _bad_block_entries(k, colors):
    """k-point structures that are not one full symmetric single color."""
    sig = signature(k, colors)
    perms = list(itertools.permutations(range(1, k + 1)))
    facts = [("c%s" % c, t) for c in colors for t in perms]
    good = set()
    for c in colors:
        good.add(frozenset(("c%s" % c, t) for t in perms))
    reps = []
    for mask in range(1 << len(facts)):
        chosen = frozenset(facts[i] for i in range(len(facts)) if (mask >> i) & 1)
        if chosen in good:
            continue
        rels = {}
        for name, t in chosen:
            rels.setdefault(name, []).append(t)
        M = Structure(sig, k, rels)
        if not any(is_isomorphic(M, rep) for rep in reps):
            reps.append(M)
    return [ForbiddenEntry(M, INDUCED) for M in reps]


def coloring_structure(k, colors, n, coloring):
    """Structure from {k-subset: color}."""
    rels = {}
    for e, c in coloring.items():
        rels.setdefault("c%s" % c, []).extend(itertools.permutations(e))
    return Structure(signature(k, colors), n, rels)


def colored_instance(k, colors, forbidden_colorings):
    """forbidden_colorings: list of (m, {k-subset of [m]: color})."""
    if not colors:
        raise InvalidArgument("need at least one color")
    entries = _loop_entries(k, colors) + _bad_block_entries(k, colors)
    for m, coloring in forbidden_colorings:
        entries.append(ForbiddenEntry(
            coloring_structure(k, colors, m, coloring), INDUCED))
    return HereditaryProperty(signature(k, colors), entries, mode=INDUCED,
                              name="colored-k%d" % k)


def color_type(k, colors, c):
    sig = signature(k, colors)
    facts = []
    for name, varmap in atoms(sig):
        facts.append(name == "c%s" % c and len(set(varmap)) == k)
    return QfType(sig, facts)


def psi(T, k, colors):
    """Set-coloring image: each k-subset's set of chosen colors."""
    by_type = {color_type(k, colors, c): c for c in colors}
    return {A: frozenset(by_type[p] for p in T.choices[A]) for A in T.subsets}


def psi_inverse(H, k, colors, n, set_coloring):
    choices = {}
    for A, cs in set_coloring.items():
        if not cs:
            raise InvalidArgument("set-coloring must be complete")
        choices[tuple(sorted(A))] = {color_type(k, colors, c) for c in cs}
    return Template(H, n, choices)


def _contains_forbidden(coloring, n, k, forbidden_colorings):
    for m, pattern in forbidden_colorings:
        if m > n:
            continue
        for image in itertools.permutations(range(1, n + 1), m):
            ok = True
            for e, c in pattern.items():
                mapped = tuple(sorted(image[x - 1] for x in e))
                if coloring[mapped] != c:
                    ok = False
                    break
            if ok:
                return True
    return False


def max_product(k, colors, forbidden_colorings, n):
    """Brute force over good set-colorings: maximize the product of the
    per-subset color-set sizes. A set-coloring is good when every selection
    of one color per subset avoids the forbidden colorings.

    Independent of the template machinery.
    """
    subsets = list(itertools.combinations(range(1, n + 1), k))
    options = [tuple(c) for size in range(len(colors), 0, -1)
               for c in itertools.combinations(colors, size)]
    best = [0]
    winners = []

    def good(assignment):
        pools = [assignment[A] for A in subsets]
        for combo in itertools.product(*pools):
            coloring = dict(zip(subsets, combo))
            if _contains_forbidden(coloring, n, k, forbidden_colorings):
                return False
        return True

    for combo in itertools.product(options, repeat=len(subsets)):
        assignment = dict(zip(subsets, combo))
        product = 1
        for cs in combo:
            product *= len(cs)
        if product < best[0]:
            continue
        if good(assignment):
            if product > best[0]:
                best[0] = product
                winners.clear()
            if product == best[0]:
                winners.append(assignment)
    return best[0], winners


def max_density_log2(k, colors, forbidden_colorings, n):
    """max(n,P) as an exact rational when the max product is a power of 2."""
    from fractions import Fraction
    value, _ = max_product(k, colors, forbidden_colorings, n)
    exponent = value.bit_length() - 1
    if value != 1 << exponent:
        raise InvalidArgument("max product is not a power of two; "
                              "report the product itself instead")
    return Fraction(exponent, comb(n, k))


def all_one_triangle():
    """The standard forbidden pattern for the binary-color graph case."""
    return (3, {(1, 2): 1, (1, 3): 1, (2, 3): 1})
