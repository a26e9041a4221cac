"""End-to-end identity checks and gate-count scaling tables."""

import dataclasses
import json

import numpy as np

from . import reference as ref
from .builders import trig_transform_circuit
from .circuit import CostModel, gate_count
from .reference import TransformKind, Variant
from .simulator import circuit_unitary

__all__ = [
    "MATRIX_TOL",
    "CIRCUIT_TOL",
    "MAX_VERIFY_N",
    "MAX_COUNT_N",
    "VerificationReport",
    "ScalingRow",
    "QuadraticFit",
    "ScalingTable",
    "verify_identity",
    "block_residuals",
    "scaling_table",
    "reports_to_jsonl",
]

MATRIX_TOL = 1e-12
CIRCUIT_TOL = 1e-10
MAX_VERIFY_N = 10
MAX_COUNT_N = 16


@dataclasses.dataclass(frozen=True)
class VerificationReport:
    variant: Variant
    n: int
    matrix_residual: float
    circuit_residual: float
    block_leakage: float
    cosine_block_residual: float
    sine_block_residual: float
    tol: float
    matrix_tol: float

    @property
    def passed(self):
        circuit_side = (
            self.circuit_residual,
            self.block_leakage,
            self.cosine_block_residual,
            self.sine_block_residual,
        )
        return self.matrix_residual <= self.matrix_tol and all(r <= self.tol for r in circuit_side)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return (
            f"variant={self.variant.value} n={self.n} "
            f"matrix_residual={self.matrix_residual:.3e} "
            f"circuit_residual={self.circuit_residual:.3e} "
            f"block_leakage={self.block_leakage:.3e} "
            f"cosine_block_residual={self.cosine_block_residual:.3e} "
            f"sine_block_residual={self.sine_block_residual:.3e} {status}"
        )

    def to_record(self):
        return {
            "variant": self.variant.value,
            "n": self.n,
            "matrix_residual": self.matrix_residual,
            "circuit_residual": self.circuit_residual,
            "block_leakage": self.block_leakage,
            "cosine_block_residual": self.cosine_block_residual,
            "sine_block_residual": self.sine_block_residual,
            "pass": self.passed,
        }


def block_residuals(variant, n, unitary):
    """(leakage, cosine residual, sine residual) of a 2N x 2N unitary.

    Leakage is the largest modulus outside the two diagonal blocks. Each block
    is divided by its phase and compared with the reference transform.
    """
    variant = Variant(variant)
    cos_sl, sin_sl = ref.block_slices(variant, n)
    mask = np.ones(unitary.shape, dtype=bool)
    mask[cos_sl, cos_sl] = False
    mask[sin_sl, sin_sl] = False
    leakage = float(np.max(np.abs(unitary[mask]))) if mask.any() else 0.0
    kinds = [k for k in TransformKind if k.variant is variant]
    pc, ps = ref.BLOCK_PHASES[variant]
    res = []
    for kind, sl, phase in ((kinds[0], cos_sl, pc), (kinds[1], sin_sl, ps)):
        block = unitary[sl, sl] / phase
        res.append(float(np.max(np.abs(block - ref.trig_matrix(kind, n)))))
    return leakage, res[0], res[1]


def _check_range(n, limit):
    if not isinstance(n, (int, np.integer)) or not 1 <= n <= limit:
        raise ValueError(f"n={n!r} outside the supported range 1..{limit}")
    return int(n)


def verify_identity(variant, n, tol=CIRCUIT_TOL, matrix_tol=MATRIX_TOL):
    """Check one DFT-conjugation identity on the matrix side and the circuit side."""
    variant = Variant(variant)
    n = _check_range(n, MAX_VERIFY_N)
    oracle = ref.oracle_product(variant, n)
    matrix_residual = float(np.max(np.abs(oracle - ref.expected_product(variant, n))))
    unitary = circuit_unitary(trig_transform_circuit(variant, n))
    circuit_residual = float(np.max(np.abs(unitary - oracle)))
    leakage, cos_res, sin_res = block_residuals(variant, n, unitary)
    return VerificationReport(
        variant, n, matrix_residual, circuit_residual, leakage, cos_res, sin_res, tol, matrix_tol
    )


def reports_to_jsonl(reports):
    return "".join(json.dumps(r.to_record(), sort_keys=True) + "\n" for r in reports)


@dataclasses.dataclass(frozen=True)
class ScalingRow:
    variant: Variant
    n: int
    abstract_count: int
    linear_count: int
    quadratic_count: int

    def count(self, model):
        model = CostModel(model)
        return {
            CostModel.ABSTRACT: self.abstract_count,
            CostModel.LINEAR_MCX: self.linear_count,
            CostModel.QUADRATIC_MCX: self.quadratic_count,
        }[model]


@dataclasses.dataclass(frozen=True)
class QuadraticFit:
    """Least-squares ``a n^2 + b n + c`` with its worst relative residual."""

    a: float
    b: float
    c: float
    max_relative_residual: float

    def __call__(self, n):
        return self.a * n * n + self.b * n + self.c


@dataclasses.dataclass(frozen=True)
class ScalingTable:
    rows: tuple
    fits: dict  # Variant -> QuadraticFit


def _fit(ns, counts):
    ns = np.asarray(ns, dtype=float)
    counts = np.asarray(counts, dtype=float)
    if ns.size < 3:
        return None
    design = np.vstack([ns**2, ns, np.ones_like(ns)]).T
    (a, b, c), *_ = np.linalg.lstsq(design, counts, rcond=None)
    rel = np.max(np.abs(design @ np.array([a, b, c]) - counts) / counts)
    return QuadraticFit(float(a), float(b), float(c), float(rel))


def scaling_table(variants, n_range, fit_model=CostModel.LINEAR_MCX):
    """Gate counts under every cost model, plus a quadratic fit per variant.

    The fit is ordinary least squares of the `fit_model` counts against n;
    it is omitted (None) when fewer than three sizes are given.
    """
    variants = [Variant(v) for v in variants]
    ns = [_check_range(n, MAX_COUNT_N) for n in n_range]
    rows = []
    fits = {}
    for v in variants:
        vrows = []
        for n in ns:
            c = trig_transform_circuit(v, n)
            vrows.append(
                ScalingRow(
                    v,
                    n,
                    gate_count(c, CostModel.ABSTRACT),
                    gate_count(c, CostModel.LINEAR_MCX),
                    gate_count(c, CostModel.QUADRATIC_MCX),
                )
            )
        rows.extend(vrows)
        fits[v] = _fit(ns, [r.count(fit_model) for r in vrows])
    return ScalingTable(tuple(rows), fits)
