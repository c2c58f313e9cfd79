from src.verification.suites import SUITE_NAMES, CheckResult, SuiteReport, SuiteRunner, run_suite

__all__ = ["CheckResult", "SUITE_NAMES", "SuiteReport", "SuiteRunner", "run_suite"]
