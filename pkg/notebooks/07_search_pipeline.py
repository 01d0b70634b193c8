"""
End-to-end search
=================

Induction, difference set, clique search, word operators and dense
verification in one call. Only verified codes come back.
"""

# %%
from ebitforge.graphs import ring_graph
from ebitforge.pauli import render_pauli
from ebitforge.pipeline import search_code
from ebitforge.verify import distance

r = search_code(ring_graph(7), 4, 2, "correct", target_k=4)
print(r.diff_set_size, r.degenerate_pairs, r.candidates, r.clique.flag)
print(r.code.params)
for cw, w in zip(r.code.codewords.strings(), r.code.word_ops_encoded):
    print(cw, render_pauli(w))

# %%
# the search result really reaches distance 5
d = distance(r.code.stabilizer(), r.code.word_ops_encoded, 7)
print(d, render_pauli(d.witness))

# %%
import json
print(json.dumps(r.code.to_json(), indent=1)[:400])
