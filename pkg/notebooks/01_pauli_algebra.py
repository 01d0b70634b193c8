"""
Pauli operators with an Alice|Bob split
=======================================

Operators are strings like ``XZIIZ|I``: Alice's qubits left of the bar,
Bob's half of each ebit on the right. Phases are tracked exactly.
"""

# %%
from ebitforge.pauli import commutes, multiply, parse_pauli, render_pauli, to_matrix, weight
import numpy as np

x = parse_pauli("XZIIZ|I")
y = parse_pauli("ZXZII|I")
print(render_pauli(multiply(x, y)))   # the two i factors cancel here
print(render_pauli(multiply(parse_pauli("X|"), parse_pauli("Z|"))))  # X Z = -iY
print(commutes(x, y))                 # graph-state generators commute

# %%
# the product rule agrees with dense matrices
a, b = parse_pauli("XY|"), parse_pauli("YZ|")
print(np.allclose(to_matrix(multiply(a, b)), to_matrix(a) @ to_matrix(b)))

# %%
# weights count non-identity letters per region
e = parse_pauli("YIIZX|Z")
print(weight(e), weight(e, "alice"), weight(e, "bob"))
