"""
The type-IV circuit and its global phase
========================================

For type IV the DFT is conjugated by R and its transpose. The product
carries a factor exp(-pi i / 4N), so the circuit folds the inverse phase
into its last gate.
"""

import numpy as np

from qdct import circuit_unitary, oracle_product, trig_matrix, trig_transform_circuit

n = 3
N = 2**n
c = trig_transform_circuit("IV", n)
print([g.label for g in c.gates][:4], "...", c.gates[-1].label)

u = circuit_unitary(c)
print("distance to matrix product:", np.max(np.abs(u - oracle_product("IV", n))))

# %%
# The upper block is DCT-IV and the lower block is -i times DST-IV.

print("DCT-IV:", np.max(np.abs(u[:N, :N] - trig_matrix("dct4", n))))
print("DST-IV:", np.max(np.abs(u[N:, N:] / -1j - trig_matrix("dst4", n))))
print("leakage:", max(np.max(np.abs(u[:N, N:])), np.max(np.abs(u[N:, :N]))))
