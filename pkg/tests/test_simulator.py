import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdct.builders import qft_circuit, trig_transform_circuit
from qdct.circuit import Circuit, Control, cnot, compose, h_gate, x_gate
from qdct.reference import dft_matrix
from qdct.simulator import MAX_UNITARY_QUBITS, apply_circuit, basis_state, circuit_unitary


def test_empty_circuit_is_identity():
    psi = np.array([0.6, 0.8j])
    assert np.array_equal(apply_circuit(Circuit(1), psi), psi)
    assert np.array_equal(circuit_unitary(Circuit(2)), np.eye(4))


def test_cnot_control_on_wire0():
    # |10> -> |11>
    out = apply_circuit(Circuit(2, [cnot(0, 1)]), basis_state(2, 0b10))
    assert np.array_equal(out, basis_state(2, 0b11))


def test_cnot_truth_table_control_on_low_bit():
    # control on the least significant wire, target on the most significant:
    # |00>->|00>, |01>->|11>, |10>->|10>, |11>->|01>
    c = Circuit(2, [cnot(1, 0)])
    table = {0b00: 0b00, 0b01: 0b11, 0b10: 0b10, 0b11: 0b01}
    for src, dst in table.items():
        assert np.array_equal(apply_circuit(c, basis_state(2, src)), basis_state(2, dst))


def test_hadamard_twice():
    c = Circuit(1, [h_gate(0), h_gate(0)])
    assert np.max(np.abs(apply_circuit(c, basis_state(1, 0)) - basis_state(1, 0))) <= 1e-15


def test_x_on_msb_swaps_halves():
    u = circuit_unitary(Circuit(2, [x_gate(0)]))
    assert np.array_equal(u, np.eye(4)[[2, 3, 0, 1]])


def test_negative_control():
    c = Circuit(2, [x_gate(1, [Control(0, 0)])])
    assert np.array_equal(circuit_unitary(c), np.eye(4)[[1, 0, 2, 3]])


def test_qft3():
    assert np.max(np.abs(circuit_unitary(qft_circuit(3)) - dft_matrix(8))) <= 1e-12


def test_qubit_mismatch():
    with pytest.raises(ValueError):
        apply_circuit(Circuit(2), np.ones(8))


def test_unitary_guard():
    with pytest.raises(ValueError, match="refusing"):
        circuit_unitary(Circuit(MAX_UNITARY_QUBITS + 1))


@pytest.mark.parametrize("variant", ["I", "II", "III", "IV"])
@pytest.mark.parametrize("n", range(1, 7))
def test_norm_preserved(variant, n, rng):
    c = trig_transform_circuit(variant, n)
    psi = rng.normal(size=2**c.qubits) + 1j * rng.normal(size=2**c.qubits)
    psi /= np.linalg.norm(psi)
    assert abs(np.linalg.norm(apply_circuit(c, psi)) - 1) <= 1e-12


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from(["I", "II", "III", "IV"]),
    st.integers(1, 4),
    st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False),
    st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False),
    st.integers(0, 2**32 - 1),
)
def test_linearity(variant, n, alpha, beta, seed):
    rng = np.random.default_rng(seed)
    c = trig_transform_circuit(variant, n)
    dim = 2**c.qubits
    u, v = (rng.normal(size=dim) + 1j * rng.normal(size=dim) for _ in range(2))
    lhs = apply_circuit(c, alpha * u + beta * v)
    rhs = alpha * apply_circuit(c, u) + beta * apply_circuit(c, v)
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(1.0, abs(alpha) + abs(beta)) * 10


@pytest.mark.parametrize("n", range(1, 5))
def test_unitary_of_compose(n):
    a = trig_transform_circuit("I", n)
    b = trig_transform_circuit("IV", n)
    got = circuit_unitary(compose(a, b))
    assert np.max(np.abs(got - circuit_unitary(b) @ circuit_unitary(a))) <= 1e-11


def test_batch_matches_columns(rng):
    c = trig_transform_circuit("II", 3)
    batch = rng.normal(size=(16, 5)) + 0j
    out = apply_circuit(c, batch)
    for k in range(5):
        assert np.array_equal(out[:, k], apply_circuit(c, batch[:, k]))


def test_deterministic():
    c = trig_transform_circuit("IV", 4)
    assert np.array_equal(circuit_unitary(c), circuit_unitary(c))
