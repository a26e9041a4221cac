"""
Building the DCT-I / DST-I circuit
==================================

The type-I circuit acts on n+1 qubits. Conjugating the 2N-point QFT by the
base change T = pi D leaves a cosine block of size N+1 and a sine block of
size N-1 on the diagonal.
"""

import numpy as np

from qdct import circuit_unitary, trig_matrix, trig_transform_circuit

n = 2
N = 2**n
c = trig_transform_circuit("dct1", n)
print(c.name, "on", c.qubits, "qubits,", len(c), "gates")
for g in c.gates[:6]:
    ctrl = ",".join(f"{k.qubit}:{k.on}" for k in g.controls)
    print(f"  {g.label:6s} target={g.target} controls=[{ctrl}]")

# %%
# The unitary is block diagonal. Indices 0..N hold the cosine block.

u = circuit_unitary(c)
np.set_printoptions(precision=3, suppress=True, linewidth=120)
print(np.abs(u))

cos = u[: N + 1, : N + 1]
sin = u[N + 1 :, N + 1 :] / 1j
print("cosine block error:", np.max(np.abs(cos - trig_matrix("dct1", n))))
print("sine block error:  ", np.max(np.abs(sin - trig_matrix("dst1", n))))
