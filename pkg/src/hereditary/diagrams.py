"""Located types, canonical type-diagrams, syntactic m-diagrams, Err_l, Span.

Located types are canonicalized to the sorted enumeration of their support,
so a diagram is just a set of (support, type) pairs and choice sets are
plain sets of types.
"""

import itertools
from functools import lru_cache

from .errors import InvalidArgument
from .qftypes import QfType, atoms, qftp
from .structures import Structure


class LocatedType(object):
    """A type bound to the sorted enumeration of an r-subset of a domain."""

    __slots__ = ("support", "qftype")

    def __init__(self, support, qftype):
        support = tuple(sorted(set(support)))
        if len(support) != qftype.r:
            raise InvalidArgument("support size must equal the type arity")
        self.support = support
        self.qftype = qftype

    def facts(self):
        """Instantiated facts: {(relation, element tuple): truth value}."""
        return located_facts(self.support, self.qftype)

    def __eq__(self, other):
        return (isinstance(other, LocatedType) and self.support == other.support
                and self.qftype == other.qftype)

    def __lt__(self, other):
        return (self.support, self.qftype.facts) < (other.support, other.qftype.facts)

    def __hash__(self):
        return hash((self.support, self.qftype))

    def __repr__(self):
        return "%s@%s" % (self.qftype.id(), list(self.support))


@lru_cache(maxsize=200000)
def located_facts(support, qftype):
    out = {}
    for (name, varmap), b in zip(atoms(qftype.signature, qftype.r), qftype.facts):
        out[(name, tuple(support[v - 1] for v in varmap))] = b
    return out


class SyntacticDiagram(object):
    """A set of located types; support is the union of entry supports."""

    def __init__(self, entries):
        self.entries = frozenset(entries)
        support = set()
        for e in self.entries:
            support.update(e.support)
        self.support = tuple(sorted(support))

    def choice_sets(self):
        """Ch_sigma(A): entries grouped by support."""
        out = {}
        for e in self.entries:
            out.setdefault(e.support, set()).add(e.qftype)
        return out

    def is_m_diagram(self):
        """Exactly one entry per r-subset of the support."""
        if not self.entries:
            return True
        r = next(iter(self.entries)).qftype.r
        ch = self.choice_sets()
        for A in itertools.combinations(self.support, r):
            if len(ch.get(A, ())) != 1:
                return False
        return len(ch) == len(list(itertools.combinations(self.support, r)))

    def __eq__(self, other):
        return isinstance(other, SyntacticDiagram) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return "SyntacticDiagram(%s)" % sorted(self.entries)


def diagram(M, A):
    """Diag^M(A) as a canonical located type."""
    A = tuple(sorted(set(A)))
    if len(A) != M.signature.r:
        raise InvalidArgument("A must be an r-subset")
    return LocatedType(A, qftp(M, A))


def type_diagram(M):
    """Diag^tp(M): the canonical type-diagram, one entry per r-subset."""
    r = M.signature.r
    if M.n < r:
        raise InvalidArgument("structure smaller than r")
    return SyntacticDiagram(diagram(M, A)
                            for A in itertools.combinations(M.domain(), r))


def merge_entries(entries, n=None, signature=None):
    """Merge located types into one structure; None when inconsistent.

    The merged structure's domain is {1..n} (default: max support element);
    facts not mentioned by any entry are false.
    """
    table = {}
    support = set()
    for e in entries:
        if signature is None:
            signature = e.qftype.signature
        support.update(e.support)
        for fact, b in e.facts().items():
            prev = table.get(fact)
            if prev is None:
                table[fact] = b
            elif prev != b:
                return None
    if n is None:
        n = max(support) if support else 0
    rels = {}
    for (name, t), b in table.items():
        if b:
            rels.setdefault(name, []).append(t)
    return Structure(signature, n, rels)


def is_satisfiable(sigma, with_witness=False):
    """Satisfiability of a syntactic diagram by direct fact-table merging."""
    if not sigma.is_m_diagram():
        raise InvalidArgument("not a syntactic m-diagram")
    witness = merge_entries(sigma.entries)
    if with_witness:
        return (witness is not None), witness
    return witness is not None


def witness_structure(sigma):
    """A structure N with Diag^tp(N[support]) = sigma, relabeled to {1..m}."""
    ok, w = is_satisfiable(sigma, with_witness=True)
    if not ok:
        return None
    # relabel support to {1..m}
    pos = {a: i + 1 for i, a in enumerate(sigma.support)}
    rels = {}
    for name, ts in w.relations.items():
        rels[name] = [tuple(pos[x] for x in t) for t in ts]
    return Structure(w.signature, len(sigma.support), rels)


def is_error(sigma, ell=None):
    """Membership in Err_l: an unsatisfiable syntactic l-diagram.

    The empty diagram is a 0-diagram and never an error.
    """
    if not sigma.entries:
        return False
    if ell is not None and len(sigma.support) != ell:
        return False
    return not is_satisfiable(sigma)


def span(located_set):
    """Span(sigma): all subsets that are syntactic type-diagrams.

    Includes the empty diagram by convention.
    """
    located_set = set(located_set)
    if not located_set:
        return [SyntacticDiagram(())]
    r = next(iter(located_set)).qftype.r
    by_support = {}
    for e in located_set:
        by_support.setdefault(e.support, []).append(e)
    points = sorted(set(x for e in located_set for x in e.support))
    out = [SyntacticDiagram(())]
    for m in range(r, len(points) + 1):
        for V in itertools.combinations(points, m):
            groups = []
            complete = True
            for A in itertools.combinations(V, r):
                entries = by_support.get(A, [])
                if not entries:
                    complete = False
                    break
                groups.append(sorted(entries))
            if not complete:
                continue
            for combo in itertools.product(*groups):
                out.append(SyntacticDiagram(combo))
    return out
