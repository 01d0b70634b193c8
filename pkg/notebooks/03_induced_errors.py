"""
From Pauli errors to classical bit flips
========================================

Each Alice-side error acts on the base state like a Z-only operator.
Its support, Alice bits then Bob bits, is the induced classical error.
"""

# %%
from ebitforge.graphs import ring_graph, standard_generators
from ebitforge.induction import cl_map, cl_map_by_multiplication, enumerate_errors, induce_set, induced_report
from ebitforge.pauli import parse_pauli

s3 = standard_generators(ring_graph(3), 2)
print(cl_map(parse_pauli("IXI|II"), s3))

# %%
s5 = standard_generators(ring_graph(5), 1)
induced = induce_set(enumerate_errors(5, 1, 1), s5)
print(induced_report(induced))

# %%
# the closed form and the slow generator-multiplication route agree
errs = list(enumerate_errors(5, 5, 1))
print(all(cl_map(e, s5) == cl_map_by_multiplication(e, s5) for e in errs), len(errs))
