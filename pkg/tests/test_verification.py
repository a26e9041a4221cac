import json

import numpy as np
import pytest

from qdct.circuit import CostModel
from qdct.reference import Variant
from qdct.verification import (
    MAX_COUNT_N,
    MAX_VERIFY_N,
    VerificationReport,
    block_residuals,
    reports_to_jsonl,
    scaling_table,
    verify_identity,
)


@pytest.mark.parametrize("variant", list(Variant))
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reports_pass(variant, n):
    r = verify_identity(variant, n)
    assert r.passed
    assert r.matrix_residual <= 1e-12
    assert max(r.circuit_residual, r.block_leakage, r.cosine_block_residual, r.sine_block_residual) <= 1e-10


def test_type2_n1_example():
    r = verify_identity("II", 1)
    assert r.matrix_residual <= 1e-12 and r.block_leakage <= 1e-12


def test_deterministic():
    assert verify_identity("IV", 3) == verify_identity("IV", 3)


def test_tight_tolerance_fails():
    r = verify_identity("I", 2, tol=0.0, matrix_tol=0.0)
    residuals = (r.matrix_residual, r.circuit_residual, r.cosine_block_residual, r.sine_block_residual)
    assert r.passed == all(x == 0.0 for x in residuals)


@pytest.mark.parametrize("n", [0, MAX_VERIFY_N + 1, 2.5])
def test_range_guard(n):
    with pytest.raises(ValueError, match="outside"):
        verify_identity("II", n)


def test_line_format():
    line = verify_identity("I", 1).line()
    assert line.startswith("variant=I n=1 matrix_residual=")
    assert line.endswith(" PASS")


def test_block_residuals_detect_leakage():
    u = np.eye(4, dtype=complex)
    u[0, 3] = 0.5
    leak, _, _ = block_residuals("II", 1, u)
    assert leak == 0.5


def test_jsonl():
    reports = [verify_identity(v, 2) for v in Variant]
    lines = reports_to_jsonl(reports).splitlines()
    assert len(lines) == 4
    rec = json.loads(lines[1])
    assert rec["variant"] == "II" and rec["n"] == 2 and rec["pass"] is True
    assert set(rec) == {
        "variant", "n", "matrix_residual", "circuit_residual", "block_leakage",
        "cosine_block_residual", "sine_block_residual", "pass",
    }


def test_failing_report_line():
    r = VerificationReport(Variant.I, 1, 1.0, 0.0, 0.0, 0.0, 0.0, 1e-10, 1e-12)
    assert not r.passed and r.line().endswith(" FAIL")


class TestScaling:
    def test_golden_abstract_count(self):
        t = scaling_table(["I"], [2])
        assert t.rows[0].abstract_count == 21
        assert t.fits[Variant.I] is None

    def test_rows_and_monotone(self):
        t = scaling_table(list(Variant), range(2, 11))
        assert len(t.rows) == 36
        for v in Variant:
            rows = [r for r in t.rows if r.variant is v]
            for model in CostModel:
                counts = [r.count(model) for r in rows]
                assert all(a < b for a, b in zip(counts, counts[1:]))

    @pytest.mark.parametrize("variant", list(Variant))
    def test_linear_fit_within_five_percent(self, variant):
        fit = scaling_table([variant], range(2, 11)).fits[Variant(variant)]
        assert fit.a > 0
        assert fit.max_relative_residual <= 0.05

    def test_fit_reproduces_counts(self):
        t = scaling_table(["II"], range(2, 11), fit_model=CostModel.ABSTRACT)
        fit = t.fits[Variant.II]
        for r in t.rows:
            assert abs(fit(r.n) - r.abstract_count) <= fit.max_relative_residual * r.abstract_count + 1e-9

    def test_quadratic_mcx_exceeds_linear(self):
        for r in scaling_table(list(Variant), range(3, 7)).rows:
            assert r.quadratic_count >= r.linear_count >= r.abstract_count

    def test_range_guard(self):
        with pytest.raises(ValueError):
            scaling_table(["I"], [MAX_COUNT_N + 1])
