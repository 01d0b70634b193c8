"""
Ground truth by state vectors
=============================

Build every basis state ``w_l|S>`` densely and test the Knill-Laflamme
condition error by error. This is how the two shipped fixtures are judged.
"""

# %%
import numpy as np
from ebitforge import fixtures
from ebitforge.induction import enumerate_errors
from ebitforge.pauli import render_pauli
from ebitforge.verify import basis_states, build_encoder, distance, kl_check
from ebitforge.words import word_operators

s5 = fixtures.stabilizer("ring5")
ops5 = word_operators(fixtures.fixture("ring5").codewords.codewords, s5)
u = build_encoder(s5, ops5)
print(u.shape, np.abs(u.conj().T @ u - np.eye(16)).max())
print(distance(s5, ops5, 2), render_pauli(distance(s5, ops5, 2).witness))

# %%
# the 7-qubit fixture is labelled distance 5, but its third word anticommutes
# with the stabilizer element ZXZIIII|IIII, so the KL matrix is diag(1,1,-1,1)
s7 = fixtures.stabilizer("ring7")
ops7 = word_operators(fixtures.fixture("ring7").codewords.codewords, s7)
res = kl_check(basis_states(s7, ops7), enumerate_errors(7, 4, 4))
print(res.passed, render_pauli(res.witness))
print(np.round(res.matrix.real, 12))
print(distance(s7, ops7, 5))
