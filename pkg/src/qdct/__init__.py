"""Quantum circuits for the discrete cosine and sine transforms of types I-IV.

Circuits are synthesized as gate lists (:mod:`qdct.builders`), executed by a
dense state-vector simulator (:mod:`qdct.simulator`) and checked against
matrices built directly from their defining formulas (:mod:`qdct.reference`).
"""

from .builders import SynthesisParams, apply_transform, trig_transform_circuit
from .circuit import Circuit, Control, CostModel, Gate, gate_count, parse, serialize
from .reference import TransformKind, Variant, dft_matrix, oracle_product, trig_matrix
from .simulator import apply_circuit, circuit_unitary
from .verification import scaling_table, verify_identity

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "Control",
    "CostModel",
    "Gate",
    "SynthesisParams",
    "TransformKind",
    "Variant",
    "apply_circuit",
    "apply_transform",
    "circuit_unitary",
    "dft_matrix",
    "gate_count",
    "oracle_product",
    "parse",
    "scaling_table",
    "serialize",
    "trig_matrix",
    "trig_transform_circuit",
    "verify_identity",
]
