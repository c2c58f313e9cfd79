import os
from fractions import Fraction

import pytest

from src.catalog import IdentityId, NamedSeriesId
from src.utils.exceptions import PoleAtPoint
from src.verification import CheckResult, SuiteReport, SuiteRunner, run_suite
from src.verification.suites import check_oracle_table, check_undefined_decay, noise_floor, primitive_rationals


class TestSuiteRunner:
    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            SuiteRunner(10, 30).checks_for("bogus")

    def test_identity_suite_lists_every_identity(self):
        names = [name for _, name, _ in SuiteRunner(10, 30).checks_for("identities")]
        assert names == [i.value for i in IdentityId]

    def test_identities_small_bound(self):
        report = run_suite("identities", 20, 30)
        assert report.passed, [c.to_dict() for c in report.failures]
        assert {row["suite"] for row in report.to_rows()} == {"identities"}

    def test_arithmetic_with_cache(self, tmp_path):
        report = run_suite("arithmetic", 15, 30, cache_dir=str(tmp_path))
        assert report.passed, [c.to_dict() for c in report.failures]
        assert any(name.endswith(".csv") for name in os.listdir(tmp_path))

    def test_renorm_small_bound(self):
        report = run_suite("renorm", 15, 30)
        assert report.passed, [c.to_dict() for c in report.failures]

    def test_renorm_covers_full_radii_and_undefined_roots(self):
        report = run_suite("renorm", 15, 30)
        decay = [c for c in report.checks if c.check.startswith("DECAY_")]
        assert all(c.check.endswith("_r0.8,0.9,0.95,0.99") for c in decay if "SIGMA_N1_r0.5" not in c.check)
        undefined = {c.check: c.detail["raised"] for c in report.checks if c.check.startswith("UNDEFINED_")}
        assert undefined == {
            "UNDEFINED_GHOST_SIGMA_N2": "PoleAtPoint",
            "UNDEFINED_GHOST_SIGMA_N4": "PoleAtPoint",
            "UNDEFINED_GHOST_W_N1": "PoleAtPoint",
            "UNDEFINED_GHOST_W_N2": "DomainHole",
        }

    def test_undefined_decay_wrong_expectation_fails(self):
        result = check_undefined_decay(NamedSeriesId.GHOST_W, 2, PoleAtPoint)
        assert not result.passed
        assert result.detail["raised"] == "DomainHole"

    def test_parallel_matches_serial(self):
        serial = run_suite("identities", 12, 30)
        parallel = run_suite("identities", 12, 30, parallelism=2)
        assert [c.to_row() for c in parallel.checks] == [c.to_row() for c in serial.checks]

    @pytest.mark.slow
    @pytest.mark.parametrize("suite", ["maass", "quantum"])
    def test_numeric_suites(self, suite):
        report = run_suite(suite, 1, 30)
        assert report.passed, [c.to_dict() for c in report.failures]


class TestOracleTables:
    def test_cache_reused(self, tmp_path):
        first = check_oracle_table("W_ORACLE", 20, str(tmp_path))
        second = check_oracle_table("W_ORACLE", 20, str(tmp_path))
        assert first.passed and second.passed
        assert second.detail["checked"] == 19


class TestReportModel:
    def test_failures_and_rows(self):
        report = SuiteReport(
            "arithmetic",
            10,
            30,
            [CheckResult("arithmetic", "A", True), CheckResult("arithmetic", "B", False, detail={"error": "X"})],
        )
        assert not report.passed
        assert [c.check for c in report.failures] == ["B"]
        assert set(report.to_dict()) == {"suite", "bound", "precision", "pass", "checks"}
        assert report.to_rows()[1] == {"suite": "arithmetic", "check": "B", "pass": False, "max_residual": None}

    def test_noise_floor(self):
        assert noise_floor(30) == pytest.approx(1e-25)

    def test_primitive_rationals(self):
        assert primitive_rationals(3) == [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)]
