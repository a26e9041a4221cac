"""Gate-list circuit representation.

A :class:`Circuit` is an immutable sequence of :class:`Gate` objects, each a
2x2 unitary payload on one target wire, optionally conditioned on a set of
control wires. Controls fire on 1 or on 0. Wire 0 is the most significant
qubit.

The module also carries the line-oriented ``QCIRC v1`` text format, an
OpenQASM 3 exporter, and the gate cost models used for complexity tables.
"""

import cmath
import dataclasses
import enum
import math
import re

import numpy as np

from .nummat import DTYPE, is_unitary

__all__ = [
    "Control",
    "Gate",
    "Circuit",
    "CostModel",
    "CircuitFormatError",
    "gate",
    "x_gate",
    "h_gate",
    "phase_gate",
    "cnot",
    "swap_gates",
    "append_gate",
    "compose",
    "dagger_circuit",
    "gate_count",
    "serialize",
    "parse",
    "to_qasm3",
]

_PAYLOAD_TOL = 1e-12


class CircuitFormatError(ValueError):
    """Malformed ``QCIRC`` text; ``lineno`` is 1-based."""

    def __init__(self, lineno, reason):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


@dataclasses.dataclass(frozen=True, order=True)
class Control:
    qubit: int
    on: int = 1  # 1: fires when the wire is |1>, 0: when it is |0>

    def __post_init__(self):
        if self.on not in (0, 1):
            raise ValueError(f"control polarity must be 0 or 1, got {self.on!r}")
        if self.qubit < 0:
            raise ValueError(f"negative qubit index {self.qubit}")


def _is_token(text):
    return bool(text) and "#" not in text and not any(ch.isspace() for ch in text)


def _freeze(matrix):
    m = np.asarray(matrix, dtype=DTYPE)
    if m.shape != (2, 2):
        raise ValueError(f"gate payload must be 2x2, got {m.shape}")
    return tuple(tuple(complex(v) for v in row) for row in m)


@dataclasses.dataclass(frozen=True)
class Gate:
    """A (multiply-)controlled single-qubit unitary."""

    label: str
    target: int
    payload: tuple
    controls: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "payload", _freeze(self.payload))
        controls = tuple(c if isinstance(c, Control) else Control(*c) for c in self.controls)
        object.__setattr__(self, "controls", controls)
        wires = [c.qubit for c in controls]
        if len(set(wires)) != len(wires):
            raise ValueError(f"duplicate control wire in {wires}")
        if self.target in wires:
            raise ValueError(f"target {self.target} is also a control")
        if self.target < 0:
            raise ValueError(f"negative target {self.target}")
        if not _is_token(self.label):
            raise ValueError(f"gate label must be non-empty without whitespace or '#': {self.label!r}")
        if not is_unitary(self.matrix, _PAYLOAD_TOL):
            raise ValueError(f"payload of {self.label} is not unitary")

    @property
    def matrix(self):
        return np.array(self.payload, dtype=DTYPE)

    @property
    def qubits(self):
        return (self.target, *(c.qubit for c in self.controls))

    def dagger(self):
        return dataclasses.replace(
            self, label=_dagger_label(self.label), payload=self.matrix.conj().T
        )

    def with_controls(self, *extra):
        """Copy of this gate with additional controls appended."""
        return dataclasses.replace(self, controls=self.controls + tuple(extra))


_SELF_INVERSE = {"H", "X", "Y", "Z", "P", "I", "SWAP"}
_DAGGER_PAIRS = {"B": "B†", "Bᵗ": "B̄", "J": "J†"}
_DAGGER_PAIRS.update({v: k for k, v in _DAGGER_PAIRS.items()})


def _dagger_label(label):
    if label in _SELF_INVERSE:
        return label
    if label in _DAGGER_PAIRS:
        return _DAGGER_PAIRS[label]
    if label.endswith("†"):
        return label[:-1]
    return label + "†"


def gate(label, target, matrix, controls=()):
    """Convenience constructor; `controls` may hold ``(qubit, on)`` pairs."""
    return Gate(label, target, matrix, tuple(controls))


def x_gate(target, controls=()):
    return gate("X", target, [[0, 1], [1, 0]], controls)


def h_gate(target, controls=()):
    s = 1 / math.sqrt(2)
    return gate("H", target, [[s, s], [s, -s]], controls)


def phase_gate(theta, target, controls=()):
    """diag(1, exp(i theta)); the label stays ``P`` so daggers stay phase gates."""
    return gate("P", target, [[1, 0], [0, cmath.exp(1j * theta)]], controls)


def cnot(control, target):
    return x_gate(target, [Control(control, 1)])


def swap_gates(a, b):
    return [cnot(a, b), cnot(b, a), cnot(a, b)]


@dataclasses.dataclass(frozen=True)
class Circuit:
    qubits: int
    gates: tuple = ()
    name: str = "circuit"

    def __post_init__(self):
        if self.qubits < 1:
            raise ValueError("a circuit needs at least one qubit")
        if not _is_token(self.name):
            raise ValueError(f"circuit name must be non-empty without whitespace or '#': {self.name!r}")
        gates = tuple(self.gates)
        for g in gates:
            _check_bounds(g, self.qubits)
        object.__setattr__(self, "gates", gates)

    def __len__(self):
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def renamed(self, name):
        return dataclasses.replace(self, name=name)


def _check_bounds(g, qubits):
    for q in g.qubits:
        if q >= qubits:
            raise IndexError(f"gate {g.label} touches wire {q} in a {qubits}-qubit circuit")


def append_gate(c, g):
    _check_bounds(g, c.qubits)
    return dataclasses.replace(c, gates=c.gates + (g,))


def compose(a, b, name=None):
    """Run `a` then `b`; as operators this is ``b @ a``."""
    if a.qubits != b.qubits:
        raise ValueError(f"cannot compose {a.qubits}-qubit and {b.qubits}-qubit circuits")
    return Circuit(a.qubits, a.gates + b.gates, name or a.name)


def dagger_circuit(c, name=None):
    return Circuit(
        c.qubits, tuple(g.dagger() for g in reversed(c.gates)), name or _dagger_label(c.name)
    )


class CostModel(str, enum.Enum):
    """Elementary-gate cost of one IR gate, by number of controls.

    ``abstract`` charges 1 per IR gate. ``linear-mcx`` charges 1 for a bare
    single-qubit gate, 5 for a singly controlled one and 16k for k >= 2
    controls (linear construction with a borrowed ancilla). ``quadratic-mcx``
    uses 8k**2 for k >= 2 (ancilla-free construction).
    """

    ABSTRACT = "abstract"
    LINEAR_MCX = "linear-mcx"
    QUADRATIC_MCX = "quadratic-mcx"

    def cost(self, g):
        k = len(g.controls)
        if self is CostModel.ABSTRACT or k == 0:
            return 1
        if k == 1:
            return 5
        return 16 * k if self is CostModel.LINEAR_MCX else 8 * k * k


def gate_count(c, model=CostModel.ABSTRACT):
    model = CostModel(model)
    return sum(model.cost(g) for g in c.gates)


# -- QCIRC v1 text format -----------------------------------------------------

_HEADER_RE = re.compile(r"^QCIRC v1 qubits=(\d+) name=(\S+)\s*$")
_GATE_RE = re.compile(
    r"^GATE (\S+) target=(\S+) controls=\[([^\]]*)\] u=\[([^\]]*)\]\s*$"
)


def _num(x):
    return format(x, ".17g")


def serialize(c):
    lines = [f"QCIRC v1 qubits={c.qubits} name={c.name}"]
    for g in c.gates:
        ctrls = ",".join(f"{k.qubit}:{k.on}" for k in g.controls)
        entries = ";".join(f"{_num(z.real)},{_num(z.imag)}" for row in g.payload for z in row)
        lines.append(f"GATE {g.label} target={g.target} controls=[{ctrls}] u=[{entries}]")
    return "\n".join(lines) + "\n"


def _strip_comment(line):
    return line.split("#", 1)[0].strip()


def parse(text):
    """Inverse of :func:`serialize`; raises :class:`CircuitFormatError`."""
    header = None
    gates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        if header is None:
            m = _HEADER_RE.match(line)
            if not m:
                raise CircuitFormatError(lineno, "expected 'QCIRC v1 qubits=<int> name=<string>'")
            header = (int(m.group(1)), m.group(2))
            if header[0] < 1:
                raise CircuitFormatError(lineno, "qubit count must be positive")
            continue
        gates.append(_parse_gate(line, lineno, header[0]))
    if header is None:
        raise CircuitFormatError(1, "missing QCIRC header")
    return Circuit(header[0], tuple(gates), header[1])


def _parse_gate(line, lineno, qubits):
    m = _GATE_RE.match(line)
    if not m:
        raise CircuitFormatError(lineno, "malformed GATE line")
    label, target, ctrl_text, u_text = m.groups()
    try:
        target = int(target)
        controls = []
        for item in filter(None, (s.strip() for s in ctrl_text.split(","))):
            q, on = item.split(":")
            controls.append(Control(int(q), int(on)))
        pairs = [p.split(",") for p in u_text.split(";")]
        if len(pairs) != 4 or any(len(p) != 2 for p in pairs):
            raise ValueError("payload needs four re,im pairs")
        vals = [complex(float(re_), float(im)) for re_, im in pairs]
    except ValueError as exc:
        raise CircuitFormatError(lineno, str(exc)) from None
    for q in [target, *(c.qubit for c in controls)]:
        if not 0 <= q < qubits:
            raise CircuitFormatError(lineno, f"wire {q} out of range for {qubits} qubits")
    try:
        return Gate(label, target, [vals[:2], vals[2:]], tuple(controls))
    except ValueError as exc:
        raise CircuitFormatError(lineno, str(exc)) from None


# -- OpenQASM 3 export --------------------------------------------------------


def _zyz(u):
    """Angles (theta, phi, lam, gamma) with u = exp(i gamma) U(theta, phi, lam).

    U(theta, phi, lam) = [[cos t/2, -e^{i lam} sin t/2],
                          [e^{i phi} sin t/2, e^{i(phi+lam)} cos t/2]]
    """
    a, b = u[0]
    c, d = u[1]
    theta = 2 * math.atan2(abs(c), abs(a))
    if abs(a) > 1e-12 and abs(c) > 1e-12:
        gamma = cmath.phase(a)
        phi = cmath.phase(c) - gamma
        lam = cmath.phase(-b) - gamma
    elif abs(c) <= 1e-12:  # diagonal
        gamma = cmath.phase(a)
        phi = 0.0
        lam = cmath.phase(d) - gamma
    else:  # anti-diagonal
        gamma = cmath.phase(-b)
        lam = 0.0
        phi = cmath.phase(c) - gamma
    return theta, phi, lam, gamma


def to_qasm3(c):
    """Export as OpenQASM 3 using ``ctrl``/``negctrl`` modifiers on ``U``.

    A payload's global phase becomes a (controlled) ``gphase`` so controlled
    gates keep their exact action.
    """
    lines = ["OPENQASM 3.0;", 'include "stdgates.inc";', f"qubit[{c.qubits}] q;"]
    for g in c.gates:
        theta, phi, lam, gamma = _zyz(g.payload)
        mods = "".join(("ctrl @ " if k.on else "negctrl @ ") for k in g.controls)
        ctrl_args = [f"q[{k.qubit}]" for k in g.controls]
        args = ", ".join(ctrl_args + [f"q[{g.target}]"])
        lines.append(f"// {g.label}")
        lines.append(f"{mods}U({_num(theta)}, {_num(phi)}, {_num(lam)}) {args};")
        if abs(gamma) > 1e-15:
            if ctrl_args:
                lines.append(f"{mods}gphase({_num(gamma)}) {', '.join(ctrl_args)};")
            else:
                lines.append(f"gphase({_num(gamma)});")
    return "\n".join(lines) + "\n"
