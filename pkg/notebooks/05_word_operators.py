"""
Word operators and the encoding Clifford
========================================

A codeword becomes a Z-type operator; Bob's Z's are cancelled with
stabilizer generators so only Alice acts. Pulling back through the
encoder gives the operator on the unencoded state.
"""

# %%
from ebitforge import fixtures
from ebitforge.graphs import initial_generators
from ebitforge.induction import parse_vector
from ebitforge.pauli import render_pauli
from ebitforge.words import (codeword_to_z_operator, equiv_mod_stabilizer, pull_back,
                             strip_bob, synthesize_clifford)

s5 = fixtures.stabilizer("ring5")
bits, n, c = parse_vector("00101|1")
wz = codeword_to_z_operator(bits, n, c)
w = strip_bob(wz, s5)
print(render_pauli(wz), "->", render_pauli(w))

# %%
init = initial_generators(5, 1)
cmap = synthesize_clifford(init, s5)
for a, b in zip(init.generators, s5.generators):
    print(render_pauli(a), "->", render_pauli(cmap.forward(a)), cmap.forward(a) == b)

# %%
wp = pull_back(w, cmap)
print(render_pauli(wp))
print(equiv_mod_stabilizer(wp, fixtures.fixture("ring5").word_ops_initial[2], init))
