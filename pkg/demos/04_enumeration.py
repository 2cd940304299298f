"""Enumerating connected graphs up to isomorphism.

Generation iterates edge-subset bitmasks of the complete graph and
deduplicates by canonical form (the lexicographically smallest graph6
encoding over all relabelings), so the output is one representative per
isomorphism class in a deterministic order.
"""

from degbound import (
    EnumerationSpec,
    canonical_form,
    connected_graphs,
    cycle_graph,
    enumerate_connected,
    parse_graph6,
    to_graph6,
)
from degbound.graphs import Graph

for n in range(2, 8):
    print(f"connected graphs on {n} vertices: {len(connected_graphs(n))}")
print()

# Filters compose: minimum degree, molecular (max degree <= 4), regular.
spec = EnumerationSpec(6, delta_min=2, molecular=True)
pop = enumerate_connected(spec)
print(f"{spec.describe()}: {len(pop)} graphs, first five:",
      [to_graph6(g) for g in pop[:5]])
print()

# Canonical forms ignore labeling.
a = Graph(4, [(0, 1), (1, 2), (2, 3)])
b = Graph(4, [(2, 0), (0, 3), (3, 1)])
print("two labelings of the 4-path:", to_graph6(a), to_graph6(b))
print("same canonical form:", canonical_form(a), "==", canonical_form(b))
print()

# The graph6 strings round-trip, so populations can be piped through files.
c7 = cycle_graph(7)
print("C_7 encodes as", to_graph6(c7), "and parses back:",
      parse_graph6(to_graph6(c7)) == c7)
