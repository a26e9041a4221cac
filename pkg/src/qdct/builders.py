"""Circuit synthesis for the trigonometric transforms.

Every transform circuit acts on n+1 wires for N = 2**n. Wire 0 carries the
bit ``b`` that selects the cosine or sine half, wires 1..n carry ``x`` with
wire 1 most significant.

The full circuits conjugate a quantum Fourier transform on all n+1 wires by
sparse base changes:

* type I:  T^dagger F T with T = pi D
* type II: U^dagger F V with V = pi1 (H x 1) and
  U^dagger = pi2^-1 (conj(D0) D^t) pi^-1 D1
* type III: inverse of the type II circuit
* type IV: M R^t F R with R = D1 pi1 (conj(B) x 1)
"""

import functools
import math

import numpy as np

from . import reference as ref
from .circuit import (
    Circuit,
    Control,
    compose,
    dagger_circuit,
    gate,
    h_gate,
    phase_gate,
    swap_gates,
    x_gate,
)
from .reference import TransformKind, Variant
from .simulator import apply_circuit

__all__ = [
    "SynthesisParams",
    "qft_circuit",
    "increment_circuit",
    "perm_pi_circuit",
    "perm_pi1_circuit",
    "perm_pi2_circuit",
    "perm_pi2_inverse_circuit",
    "d_operator_circuit",
    "d1_diagonal_circuit",
    "d0dt_circuit",
    "t_circuit",
    "r_circuit",
    "r_transpose_circuit",
    "v_circuit",
    "u_dagger_circuit",
    "trig_transform_circuit",
    "apply_transform",
    "valid_lengths",
]


class SynthesisParams:
    """Size and transform selector for :func:`trig_transform_circuit`."""

    __slots__ = ("n", "kind")

    def __init__(self, n, kind):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ValueError(f"n must be a positive integer, got {n!r}")
        self.n = int(n)
        self.kind = kind if isinstance(kind, TransformKind) else TransformKind.parse(kind)

    def __repr__(self):
        return f"SynthesisParams(n={self.n}, kind={self.kind.cli_name})"


def _require_positive(m, what="qubit count"):
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise ValueError(f"{what} must be >= 1, got {m!r}")
    return int(m)


def _lift(gates, offset, controls=()):
    """Shift gate wires by `offset` and append extra `controls` to each gate."""
    out = []
    for g in gates:
        shifted = tuple(Control(c.qubit + offset, c.on) for c in g.controls)
        out.append(
            gate(g.label, g.target + offset, g.payload, shifted + tuple(controls))
        )
    return out


def _lower_zero_controls(n):
    return [Control(w, 0) for w in range(1, n + 1)]


@functools.lru_cache(maxsize=None)
def qft_circuit(m):
    """QFT on `m` wires: unitary equals ``dft_matrix(2**m)``.

    One H per wire, controlled phases pi/2**k to the less significant wires,
    then floor(m/2) swaps (three CNOTs each) to reverse the wire order.
    """
    m = _require_positive(m)
    gates = []
    for j in range(m):
        gates.append(h_gate(j))
        for k in range(j + 1, m):
            gates.append(phase_gate(math.pi / 2 ** (k - j), j, [Control(k, 1)]))
    for j in range(m // 2):
        gates.extend(swap_gates(j, m - 1 - j))
    return Circuit(m, gates, f"qft{m}")


@functools.lru_cache(maxsize=None)
def increment_circuit(m):
    """x -> x+1 mod 2**m as a descending cascade of multiply-controlled X."""
    m = _require_positive(m)
    gates = [
        x_gate(t, [Control(w, 1) for w in range(t + 1, m)]) for t in range(m)
    ]
    return Circuit(m, gates, f"inc{m}")


def _controlled_increment(n):
    return _lift(increment_circuit(n).gates, 1, [Control(0, 1)])


def _conditional_complement(n):
    return [x_gate(w, [Control(0, 1)]) for w in range(1, n + 1)]


@functools.lru_cache(maxsize=None)
def perm_pi_circuit(n):
    """|0x> -> |0x>, |1x> -> |1 x'> with x' = 2**n - x mod 2**n."""
    n = _require_positive(n, "n")
    return Circuit(n + 1, _conditional_complement(n) + _controlled_increment(n), f"pi_n{n}")


@functools.lru_cache(maxsize=None)
def perm_pi1_circuit(n):
    """|0x> -> |0x>, |1x> -> |1 ~x> (one's complement)."""
    n = _require_positive(n, "n")
    return Circuit(n + 1, _conditional_complement(n), f"pi1_n{n}")


@functools.lru_cache(maxsize=None)
def perm_pi2_circuit(n):
    """|0x> -> |0x>, |1x> -> |1 (x+1 mod 2**n)>."""
    n = _require_positive(n, "n")
    return Circuit(n + 1, _controlled_increment(n), f"pi2_n{n}")


@functools.lru_cache(maxsize=None)
def perm_pi2_inverse_circuit(n):
    return dagger_circuit(perm_pi2_circuit(n), f"pi2inv_n{n}")


@functools.lru_cache(maxsize=None)
def d_operator_circuit(n):
    """B on wire 0, then B^dagger on wire 0 when every lower wire is 0."""
    n = _require_positive(n, "n")
    b = ref.b_matrix()
    gates = [
        gate("B", 0, b),
        gate("B†", 0, b.conj().T, _lower_zero_controls(n)),
    ]
    return Circuit(n + 1, gates, f"D_n{n}")


def _delta_gates(n):
    # Delta1 (+) Delta2: L_j on the |0> half, K_j on the |1> half, with
    # L_j = diag(1, w^(2^(j-1))) and K_j = diag(conj(w)^(2^(j-1)), 1) on the
    # wire holding bit j-1 of x
    gates = []
    for j in range(1, n + 1):
        wire = n - j + 1
        p = np.exp(2j * np.pi * 2 ** (j - 1) / (4 * 2**n))
        gates.append(gate(f"L_{j}", wire, np.diag([1, p]), [Control(0, 0)]))
        gates.append(gate(f"K_{j}", wire, np.diag([np.conj(p), 1]), [Control(0, 1)]))
    return gates


def _c_matrix(n):
    return np.diag([1, np.conj(ref.omega(n))])


@functools.lru_cache(maxsize=None)
def d1_diagonal_circuit(n):
    """D1 = (C x 1)(Delta1 (+) Delta2), C = diag(1, conj(w))."""
    n = _require_positive(n, "n")
    return Circuit(n + 1, _delta_gates(n) + [gate("C", 0, _c_matrix(n))], f"D1_n{n}")


@functools.lru_cache(maxsize=None)
def d0dt_circuit(n):
    """conj(D0) D^t: B^t on wire 0, then J on wire 0 when all lower wires are 0."""
    n = _require_positive(n, "n")
    gates = [
        gate("Bᵗ", 0, ref.b_matrix().T),
        gate("J", 0, ref.j_matrix(), _lower_zero_controls(n)),
    ]
    return Circuit(n + 1, gates, f"D0Dt_n{n}")


# -- base changes -------------------------------------------------------------


def _chain(name, *parts):
    return functools.reduce(compose, parts).renamed(name)


@functools.lru_cache(maxsize=None)
def t_circuit(n):
    """T = pi D."""
    return _chain(f"T_n{n}", d_operator_circuit(n), perm_pi_circuit(n))


@functools.lru_cache(maxsize=None)
def r_circuit(n):
    """R = D1 pi1 (conj(B) x 1)."""
    bbar = Circuit(n + 1, [gate("B̄", 0, ref.b_matrix().conj())])
    return _chain(f"R_n{n}", bbar, perm_pi1_circuit(n), d1_diagonal_circuit(n))


def _rt_gates(n, tail):
    # R^t = (B^dagger x 1) pi1 D1. C commutes with the wire-0-controlled pi1,
    # so it joins B^dagger (and optionally M) in one trailing gate on wire 0.
    return _delta_gates(n) + _conditional_complement(n) + [gate(tail[0], 0, tail[1])]


@functools.lru_cache(maxsize=None)
def r_transpose_circuit(n):
    n = _require_positive(n, "n")
    tail = ref.b_matrix().conj().T @ _c_matrix(n)
    return Circuit(n + 1, _rt_gates(n, ("B†C", tail)), f"Rt_n{n}")


@functools.lru_cache(maxsize=None)
def v_circuit(n):
    """V = pi1 (H x 1)."""
    return _chain(f"V_n{n}", Circuit(n + 1, [h_gate(0)]), perm_pi1_circuit(n))


@functools.lru_cache(maxsize=None)
def u_dagger_circuit(n):
    """U^dagger = pi2^-1 (conj(D0) D^t) pi^-1 D1."""
    return _chain(
        f"Udg_n{n}",
        d1_diagonal_circuit(n),
        dagger_circuit(perm_pi_circuit(n)),
        d0dt_circuit(n),
        perm_pi2_inverse_circuit(n),
    )


# -- full transforms ----------------------------------------------------------


def _resolve_variant(selector):
    if isinstance(selector, SynthesisParams):
        return selector.kind.variant
    if isinstance(selector, TransformKind):
        return selector.variant
    if isinstance(selector, Variant):
        return selector
    if selector in Variant.__members__:
        return Variant(selector)
    return TransformKind.parse(selector).variant


@functools.lru_cache(maxsize=None)
def _variant_circuit(variant, n):
    n = _require_positive(n, "n")
    name = f"type{variant.value}_n{n}"
    qft = qft_circuit(n + 1)
    if variant is Variant.I:
        t = t_circuit(n)
        return _chain(name, t, qft, dagger_circuit(t))
    if variant is Variant.II:
        return _chain(name, v_circuit(n), qft, u_dagger_circuit(n))
    if variant is Variant.III:
        return dagger_circuit(_variant_circuit(Variant.II, n), name)
    N = 2**n
    m = np.exp(1j * math.pi / (4 * N)) * np.eye(2)
    tail = m @ ref.b_matrix().conj().T @ _c_matrix(n)
    out = Circuit(n + 1, _rt_gates(n, ("MB†C", tail)))
    return _chain(name, r_circuit(n), qft, out)


def trig_transform_circuit(params, n=None):
    """Circuit on n+1 wires whose unitary is the DFT conjugation for a variant.

    `params` is a :class:`SynthesisParams`, or a kind / variant selector
    together with `n`. DCT and DST of one variant share the same circuit.
    """
    if n is None:
        if not isinstance(params, SynthesisParams):
            raise TypeError("n is required unless params is a SynthesisParams")
        n = params.n
    return _variant_circuit(_resolve_variant(params), _require_positive(n, "n"))


# -- classical-vector interface ----------------------------------------------


def valid_lengths(kind, limit=8):
    """First few admissible input lengths for `kind` (for error messages)."""
    return [kind.size(n) for n in range(1, limit + 1)]


def _infer_n(kind, length):
    for n in range(1, 31):
        size = kind.size(n)
        if size == length:
            return n
        if size > length:
            break
    shown = ", ".join(str(s) for s in valid_lengths(kind))
    raise ValueError(
        f"length {length} is not valid for {kind.cli_name}; valid lengths are {shown}, ..."
    )


def apply_transform(kind, x):
    """Apply transform `kind` to real data `x` by simulating its circuit.

    `x` is a vector, or a 2-D array whose columns are transformed
    independently. The data is embedded in its block of the 2N-dimensional
    state, normalized, run through the circuit, read back from the same
    block, rescaled, and stripped of the block phase.
    """
    kind = kind if isinstance(kind, TransformKind) else TransformKind.parse(kind)
    data = np.asarray(x, dtype=float)
    if data.ndim not in (1, 2):
        raise ValueError("input must be a vector or a 2-D array of column vectors")
    n = _infer_n(kind, data.shape[0])
    cols = data.reshape(data.shape[0], -1)
    variant = kind.variant
    cos_sl, sin_sl = ref.block_slices(variant, n)
    sl = cos_sl if kind.family == "cosine" else sin_sl
    phase = ref.BLOCK_PHASES[variant][0 if kind.family == "cosine" else 1]

    norms = np.linalg.norm(cols, axis=0)
    live = norms > 0
    state = np.zeros((2 ** (n + 1), cols.shape[1]), dtype=complex)
    state[sl, live] = cols[:, live] / norms[live]
    out = apply_circuit(trig_transform_circuit(variant, n), state)
    y = np.zeros_like(cols)
    y[:, live] = (out[sl, live] / phase).real * norms[live]
    return y.reshape(data.shape)
