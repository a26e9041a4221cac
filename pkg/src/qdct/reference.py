"""Classical reference matrices built by direct formula evaluation.

Everything here is ground truth for the circuit checks: the DFT, the eight
orthogonal trigonometric transforms, and the sparse base-change matrices that
turn a length-2N DFT into a direct sum of a cosine and a sine transform.

Basis convention: on n+1 qubits the basis state ``|b x>`` (``b`` a single
bit, ``x`` an n-bit integer) has index ``b * 2**n + x``, i.e. ``b`` is the
most significant bit.
"""

import enum

import numpy as np

from .nummat import DTYPE, dagger, direct_sum, identity, kron

__all__ = [
    "Variant",
    "TransformKind",
    "BaseChangeName",
    "BLOCK_PHASES",
    "dft_matrix",
    "trig_matrix",
    "base_change_matrix",
    "block_slices",
    "oracle_product",
    "expected_product",
    "hadamard",
    "b_matrix",
    "j_matrix",
    "omega",
    "block_factor_matrices",
]


class Variant(str, enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


class TransformKind(enum.Enum):
    """The eight transforms {DCT, DST} x {I, II, III, IV}."""

    DCT1 = ("cosine", Variant.I)
    DCT2 = ("cosine", Variant.II)
    DCT3 = ("cosine", Variant.III)
    DCT4 = ("cosine", Variant.IV)
    DST1 = ("sine", Variant.I)
    DST2 = ("sine", Variant.II)
    DST3 = ("sine", Variant.III)
    DST4 = ("sine", Variant.IV)

    @property
    def family(self):
        return self.value[0]

    @property
    def variant(self):
        return self.value[1]

    @property
    def cli_name(self):
        return self.name.lower()

    @classmethod
    def parse(cls, text):
        try:
            return cls[text.strip().upper()]
        except KeyError:
            names = ", ".join(k.cli_name for k in cls)
            raise ValueError(f"unknown transform kind {text!r} (expected one of {names})") from None

    def size(self, n):
        """Length of the vectors this transform acts on for N = 2**n."""
        N = 2**n
        if self.variant is Variant.I:
            return N + 1 if self.family == "cosine" else N - 1
        return N


class BaseChangeName(str, enum.Enum):
    T = "T"
    R = "R"
    U = "U"
    V = "V"
    D = "D"
    D0 = "D0"
    D1 = "D1"
    PI = "PI"
    PI1 = "PI1"
    PI2 = "PI2"


# Phase multiplying the (cosine, sine) block in DFT-conjugation identities.
# Type II/III carry -1 on the sine block: this is what the base changes U, V
# actually produce (the often-quoted -i does not hold for them).
BLOCK_PHASES = {
    Variant.I: (1.0 + 0j, 1j),
    Variant.II: (1.0 + 0j, -1.0 + 0j),
    Variant.III: (1.0 + 0j, -1.0 + 0j),
    Variant.IV: (1.0 + 0j, -1j),
}

_SQRT1_2 = 1.0 / np.sqrt(2.0)


def _check_n(n):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return int(n)


def omega(n):
    """Primitive 4N-th root of unity exp(2 pi i / 4N), N = 2**n."""
    return _wpow(n, 1)


def _wpow(n, k):
    """omega(n) ** k evaluated directly, k may be a negative integer array."""
    m = 4 * 2**n
    return np.exp(2j * np.pi * (np.asarray(k) % m) / m)


def hadamard():
    return np.array([[1, 1], [1, -1]], dtype=DTYPE) * _SQRT1_2


def b_matrix():
    """B = (1/sqrt 2) [[1, i], [1, -i]], the single-qubit part of D."""
    return np.array([[1, 1j], [1, -1j]], dtype=DTYPE) * _SQRT1_2


def j_matrix():
    """J = (1/sqrt 2) [[1, -i], [-i, 1]], the correction inside conj(D0) D^t."""
    return np.array([[1, -1j], [-1j, 1]], dtype=DTYPE) * _SQRT1_2


def dft_matrix(m):
    """Unitary DFT of length `m`: entry (k, l) is exp(2 pi i k l / m) / sqrt(m)."""
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise ValueError(f"DFT length must be >= 1, got {m!r}")
    k = np.arange(m)
    # reduce k*l mod m first so large m keeps full phase accuracy
    return np.exp(2j * np.pi * (np.outer(k, k) % m) / m) / np.sqrt(m)


def _scale(count, halved):
    s = np.ones(count)
    s[list(halved)] = _SQRT1_2
    return s


def trig_matrix(kind, n):
    """Real orthogonal matrix of transform `kind` for N = 2**n.

    DCT-I is (N+1)x(N+1), DST-I is (N-1)x(N-1), the rest are NxN. Type III
    matrices are the exact transposes of type II.

    >>> np.round(trig_matrix(TransformKind.DCT2, 1), 4)
    array([[ 0.7071,  0.7071],
           [ 0.7071, -0.7071]])
    """
    n = _check_n(n)
    kind = kind if isinstance(kind, TransformKind) else TransformKind.parse(kind)
    N = 2**n
    c = np.sqrt(2.0 / N)
    v = kind.variant
    if v is Variant.III:
        twin = TransformKind.DCT2 if kind.family == "cosine" else TransformKind.DST2
        return trig_matrix(twin, n).T.copy()

    if kind.family == "cosine":
        if v is Variant.I:
            i = np.arange(N + 1)
            k = _scale(N + 1, (0, N))
            return c * np.outer(k, k) * np.cos(np.outer(i, i) * np.pi / N)
        i = np.arange(N)
        if v is Variant.II:
            return c * _scale(N, (0,))[:, None] * np.cos(np.outer(i, i + 0.5) * np.pi / N)
        return c * np.cos(np.outer(i + 0.5, i + 0.5) * np.pi / N)

    if v is Variant.I:
        i = np.arange(1, N)
        return c * np.sin(np.outer(i, i) * np.pi / N)
    i = np.arange(N)
    if v is Variant.II:
        return c * _scale(N, (N - 1,))[:, None] * np.sin(np.outer(i + 1, i + 0.5) * np.pi / N)
    return c * np.sin(np.outer(i + 0.5, i + 0.5) * np.pi / N)


def _perm(dest):
    """Permutation matrix sending basis index j to dest[j]."""
    dest = np.asarray(dest)
    p = np.zeros((dest.size, dest.size), dtype=DTYPE)
    p[dest, np.arange(dest.size)] = 1
    return p


def _t_matrix(N):
    # T|00> = |00>, T|10> = |10>,
    # T|0x> = (|0x> + |1x'>)/sqrt2, T|1x> = (i|0x> - i|1x'>)/sqrt2, 1 <= x < N
    t = np.zeros((2 * N, 2 * N), dtype=DTYPE)
    t[0, 0] = 1
    t[N, N] = 1
    x = np.arange(1, N)
    xc = N - x
    t[x, x] = _SQRT1_2
    t[N + xc, x] = _SQRT1_2
    t[x, N + x] = 1j * _SQRT1_2
    t[N + xc, N + x] = -1j * _SQRT1_2
    return t


def _d_matrix(N):
    # as T, without the two's complement on the lower half
    d = np.zeros((2 * N, 2 * N), dtype=DTYPE)
    d[0, 0] = 1
    d[N, N] = 1
    x = np.arange(1, N)
    d[x, x] = _SQRT1_2
    d[N + x, x] = _SQRT1_2
    d[x, N + x] = 1j * _SQRT1_2
    d[N + x, N + x] = -1j * _SQRT1_2
    return d


def _r_matrix(n):
    # rows 0..N-1:   w^x at (x, x), -i w^x at (x, N+x)
    # rows N+k:      conj(w)^(N-k) at (N+k, N-1-k), i conj(w)^(N-k) at (N+k, 2N-1-k)
    N = 2**n
    r = np.zeros((2 * N, 2 * N), dtype=DTYPE)
    x = np.arange(N)
    r[x, x] = _wpow(n, x)
    r[x, N + x] = -1j * _wpow(n, x)
    wb = _wpow(n, -(N - x))
    r[N + x, N - 1 - x] = wb
    r[N + x, 2 * N - 1 - x] = 1j * wb
    return r * _SQRT1_2


def _u_matrix(n):
    # U|00> = |00>, U|11> = -|10>,
    # U|0x> = (conj(w)^x |0x> + w^x |1x'>)/sqrt2,               1 <= x < N
    # U|1y> = (-i conj(w)^(y+1) |0,y+1> + i w^(y+1) |1,~y>)/sqrt2, 0 <= y < N-1
    N = 2**n
    u = np.zeros((2 * N, 2 * N), dtype=DTYPE)
    u[0, 0] = 1
    u[N, 2 * N - 1] = -1
    x = np.arange(1, N)
    u[x, x] = _wpow(n, -x) * _SQRT1_2
    u[N + (N - x), x] = _wpow(n, x) * _SQRT1_2
    y = np.arange(N - 1)
    u[y + 1, N + y] = -1j * _wpow(n, -(y + 1)) * _SQRT1_2
    u[N + (N - 1 - y), N + y] = 1j * _wpow(n, y + 1) * _SQRT1_2
    return u


def _v_matrix(N):
    v = np.zeros((2 * N, 2 * N), dtype=DTYPE)
    x = np.arange(N)
    v[x, x] = 1
    v[x, N + x] = 1
    v[N + (N - 1 - x), x] = 1
    v[N + (N - 1 - x), N + x] = -1
    return v * _SQRT1_2


def base_change_matrix(name, n):
    """2N x 2N base-change or auxiliary matrix `name` (N = 2**n).

    Each matrix is written out from its action on basis states, never from
    one of the product factorizations; those are what the tests check.
    """
    n = _check_n(n)
    name = BaseChangeName(name)
    N = 2**n
    x = np.arange(N)
    if name is BaseChangeName.T:
        return _t_matrix(N)
    if name is BaseChangeName.D:
        return _d_matrix(N)
    if name is BaseChangeName.R:
        return _r_matrix(n)
    if name is BaseChangeName.U:
        return _u_matrix(n)
    if name is BaseChangeName.V:
        return _v_matrix(N)
    if name is BaseChangeName.D0:
        d0 = identity(2 * N)
        d0[N, N] = 1j
        return d0
    if name is BaseChangeName.D1:
        return np.diag(np.concatenate([_wpow(n, x), _wpow(n, -(N - x))]))
    if name is BaseChangeName.PI:
        return _perm(np.concatenate([x, N + (N - x) % N]))
    if name is BaseChangeName.PI1:
        return _perm(np.concatenate([x, N + (N - 1 - x)]))
    return _perm(np.concatenate([x, N + (x + 1) % N]))


def block_slices(variant, n):
    """(cosine, sine) index slices of the direct-sum blocks on 2N indices."""
    N = 2**n
    if Variant(variant) is Variant.I:
        return slice(0, N + 1), slice(N + 1, 2 * N)
    return slice(0, N), slice(N, 2 * N)


def oracle_product(variant, n):
    """Left-hand side of the DFT conjugation identity, from matrices only.

    I:   T^dagger F_2N T
    II:  U^dagger F_2N V
    III: (U^dagger F_2N V)^dagger
    IV:  exp(pi i / 4N) R^t F_2N R
    """
    n = _check_n(n)
    variant = Variant(variant)
    N = 2**n
    f = dft_matrix(2 * N)
    if variant is Variant.I:
        t = base_change_matrix("T", n)
        return dagger(t) @ f @ t
    if variant is Variant.IV:
        r = base_change_matrix("R", n)
        return np.exp(1j * np.pi / (4 * N)) * (r.T @ f @ r)
    prod = dagger(base_change_matrix("U", n)) @ f @ base_change_matrix("V", n)
    return prod if variant is Variant.II else dagger(prod)


def expected_product(variant, n):
    """Right-hand side: cosine block (+) phase * sine block."""
    variant = Variant(variant)
    cos_kind, sin_kind = _kinds(variant)
    pc, ps = BLOCK_PHASES[variant]
    return direct_sum(pc * trig_matrix(cos_kind, n), ps * trig_matrix(sin_kind, n))


def _kinds(variant):
    kinds = [k for k in TransformKind if k.variant is variant]
    return kinds[0], kinds[1]


def block_factor_matrices(n):
    """Tensor pieces of D1: (Delta1 (+) Delta2) built from L_j and K_j, and C."""
    n = _check_n(n)
    delta1 = np.ones((1, 1), dtype=DTYPE)
    delta2 = np.ones((1, 1), dtype=DTYPE)
    for j in range(n, 0, -1):
        p = _wpow(n, 2 ** (j - 1))
        delta1 = kron(delta1, np.diag([1, p]))
        delta2 = kron(delta2, np.diag([np.conj(p), 1]))
    c = np.diag([1, _wpow(n, -1)])
    return delta1, delta2, c
