"""Dense complex matrix helpers.

Matrices and state vectors are plain ``numpy.ndarray`` objects of dtype
``complex128``. The functions here add the dimension checks the rest of the
package relies on; they never mutate their inputs.
"""

import numpy as np

__all__ = [
    "DTYPE",
    "DEFAULT_TOL",
    "DimensionError",
    "as_matrix",
    "identity",
    "mat_mul",
    "kron",
    "direct_sum",
    "dagger",
    "max_abs_diff",
    "is_unitary",
    "is_permutation",
]

DTYPE = np.complex128
DEFAULT_TOL = 1e-10


class DimensionError(ValueError):
    """Raised when operand shapes violate an operation's contract."""


def as_matrix(a):
    """Return `a` as a 2-D complex array (copying only when needed)."""
    m = np.asarray(a, dtype=DTYPE)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2 or m.size == 0:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def identity(dim):
    return np.eye(dim, dtype=DTYPE)


def mat_mul(a, b):
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def kron(a, b):
    return np.kron(as_matrix(a), as_matrix(b))


def direct_sum(a, b):
    """Block-diagonal matrix with `a` top-left and `b` bottom-right."""
    a, b = as_matrix(a), as_matrix(b)
    out = np.zeros((a.shape[0] + b.shape[0], a.shape[1] + b.shape[1]), dtype=DTYPE)
    out[: a.shape[0], : a.shape[1]] = a
    out[a.shape[0]:, a.shape[1]:] = b
    return out


def dagger(a):
    return as_matrix(a).conj().T


def max_abs_diff(a, b):
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))


def is_unitary(a, tol=1e-12):
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError(f"unitarity needs a square matrix, got {a.shape}")
    return max_abs_diff(a.conj().T @ a, identity(a.shape[0])) <= tol


def is_permutation(a, tol=1e-13):
    """True if `a` is a 0/1 matrix with exactly one 1 per row and column."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        return False
    rounded = np.rint(a.real)
    if np.max(np.abs(a - rounded)) > tol:
        return False
    if not np.all((rounded == 0) | (rounded == 1)):
        return False
    return bool(np.all(rounded.sum(axis=0) == 1) and np.all(rounded.sum(axis=1) == 1))
