"""Dense state-vector simulation and unitary extraction.

States are complex arrays of length ``2**qubits`` (or ``2**qubits x k`` for a
batch of ``k`` states held column-wise). Wire 0 is the most significant bit
of the basis index, so a state reshaped to ``(2,) * qubits`` has wire ``q`` on
axis ``q``.
"""

import numpy as np

from .nummat import DTYPE

__all__ = ["MAX_UNITARY_QUBITS", "apply_gate", "apply_circuit", "basis_state", "circuit_unitary"]

MAX_UNITARY_QUBITS = 12


def basis_state(qubits, index):
    psi = np.zeros(2**qubits, dtype=DTYPE)
    psi[index] = 1
    return psi


def apply_gate(g, tensor):
    """Apply `g` in place to a state tensor of shape ``(2,)*qubits + (batch,)``.

    Only the sub-block where every control matches its polarity is touched;
    the two target slices are disjoint views, so the update is exact and
    order-independent.
    """
    index = [slice(None)] * tensor.ndim
    for c in g.controls:
        index[c.qubit] = c.on
    lo, hi = list(index), list(index)
    lo[g.target] = 0
    hi[g.target] = 1
    lo, hi = tuple(lo), tuple(hi)
    (u00, u01), (u10, u11) = g.payload
    a0 = tensor[lo].copy()
    a1 = tensor[hi]
    tensor[lo] = u00 * a0 + u01 * a1
    tensor[hi] = u10 * a0 + u11 * a1


def apply_circuit(c, state):
    """Run circuit `c` on `state` (vector or column batch); returns a new array."""
    psi = np.array(state, dtype=DTYPE)
    dim = 2**c.qubits
    if psi.shape[0] != dim or psi.ndim not in (1, 2):
        raise ValueError(
            f"state of shape {psi.shape} does not match a {c.qubits}-qubit circuit (dim {dim})"
        )
    batch = 1 if psi.ndim == 1 else psi.shape[1]
    tensor = psi.reshape((2,) * c.qubits + (batch,))
    for g in c.gates:
        apply_gate(g, tensor)
    return tensor.reshape(psi.shape)


def circuit_unitary(c):
    """Full unitary of `c`; column j is the image of basis state j."""
    if c.qubits > MAX_UNITARY_QUBITS:
        raise ValueError(
            f"refusing to extract a {c.qubits}-qubit unitary "
            f"(limit is {MAX_UNITARY_QUBITS} qubits)"
        )
    return apply_circuit(c, np.eye(2**c.qubits, dtype=DTYPE))
