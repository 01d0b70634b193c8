"""
Standard-form generators from a graph
=====================================

A graph plus an ebit count ``c`` fixes the stabilizer. The last ``c``
vertices are paired with Bob's qubits.
"""

# %%
from ebitforge.graphs import anticommutation_signature, initial_generators, ring_graph, standard_generators

g = ring_graph(5)
print(g.adjacency)

# %%
s = standard_generators(g, 1)
print("\n".join(s.table()))

# %%
# same (isotropic, symplectic) structure as the unencoded |0..0>|Phi+> state
s0 = initial_generators(5, 1)
print(anticommutation_signature(s), anticommutation_signature(s0))

# %%
# c = 0 is an ordinary graph state
print("\n".join(standard_generators(ring_graph(3), 0).table()))
