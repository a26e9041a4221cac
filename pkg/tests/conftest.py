import numpy as np
import pytest

from qdct.circuit import Control


def dense_gate(qubits, target, payload, controls=()):
    """Full 2^q x 2^q matrix of a controlled gate, built basis state by basis state.

    Independent of the simulator: used as the second route in circuit tests.
    """
    dim = 2**qubits
    u = np.asarray(payload, dtype=complex)
    out = np.zeros((dim, dim), dtype=complex)

    def bit(i, q):
        return (i >> (qubits - 1 - q)) & 1

    for col in range(dim):
        if all(bit(col, c.qubit) == c.on for c in controls):
            b = bit(col, target)
            flip = col ^ (1 << (qubits - 1 - target))
            out[col if b == 0 else flip, col] += u[0, b]
            out[flip if b == 0 else col, col] += u[1, b]
        else:
            out[col, col] = 1
    return out


def dense_circuit(circuit):
    u = np.eye(2**circuit.qubits, dtype=complex)
    for g in circuit.gates:
        u = dense_gate(circuit.qubits, g.target, g.payload, g.controls) @ u
    return u


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        _ACCEPTANCE.append((props["criterion"], report.outcome, props.get("detail", "")))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, detail in sorted(_ACCEPTANCE):
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"{status}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)


__all__ = ["Control", "dense_gate", "dense_circuit"]
