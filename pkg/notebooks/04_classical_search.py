"""
Classical codes as cliques
==========================

Two words are compatible when their XOR is not a forbidden difference.
A code is then a clique containing 0 in the compatibility graph.
"""

# %%
from ebitforge.graphs import ring_graph, standard_generators
from ebitforge.induction import enumerate_errors, induce_set
from ebitforge.search import (ClassicalCode, build_compatibility, candidate_order,
                              detection_diff_set, detects, max_clique)

s5 = standard_generators(ring_graph(5), 1)
diff = detection_diff_set(enumerate_errors(5, 1, 1), s5)
cand = candidate_order(v for v in range(1, 64) if v not in diff)
print(len(diff), "forbidden differences,", len(cand), "candidates")

# %%
res = max_clique(build_compatibility(cand, diff))
code = ClassicalCode(tuple([0] + res.clique), 5, 1)
print(code.K, res.flag, res.nodes, "nodes")
print(code.strings())

# %%
print(detects(code, induce_set(enumerate_errors(5, 1, 1), s5)))

# %%
# a budget stops the search early and says so
s7 = standard_generators(ring_graph(7), 4)
d7 = detection_diff_set(enumerate_errors(7, 1, 4), s7)
c7 = candidate_order(v for v in range(1, 1 << 11) if v not in d7)
r = max_clique(build_compatibility(c7, d7), budget=3)
print(len(r.clique) + 1, r.flag)
