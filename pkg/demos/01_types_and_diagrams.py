"""Quantifier-free pair types and syntactic diagrams, on digraphs.

A complete proper 2-type fixes the truth value of every atom E(x_i, x_j)
with i, j in {1, 2}. The full space over one binary relation has 2^4 = 16
types; a hereditary property realizes only a few of them.
"""

from hereditary.diagrams import is_satisfiable, type_diagram, witness_structure
from hereditary.instances import digraphs
from hereditary.properties import realized_type_space
from hereditary.qftypes import type_space
from hereditary.structures import Structure

sig = digraphs.SIG
space = type_space(sig)
print("full type space: %d types" % len(space))
print("first few ids:", [p.id() for p in space[:5]])

H = digraphs.digraph_instance(2)
realized = realized_type_space(H)
print("\nrealized by the T_3-free digraph property: %d types" % len(realized))
for p in realized:
    print(" ", p)

cycle = Structure(sig, 3, {"E": [(1, 2), (2, 3), (3, 1)]})
sigma = type_diagram(cycle)
print("\ncanonical type-diagram of the directed 3-cycle:")
for entry in sorted(sigma.entries):
    print(" ", entry)
print("satisfiable:", is_satisfiable(sigma))
print("witness equals the original:", witness_structure(sigma) == cycle)
