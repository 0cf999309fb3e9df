from adjtoric.verify.report import CheckResult, VerificationReport, FuzzReport
from adjtoric.verify.checks import ALL_CHECKS, MEMBERSHIP_DEGREE, verify_theorem, membership_check
from adjtoric.verify.fuzz import (
    DEFAULT_BOUNDS,
    SUPPORTED_BOUNDS,
    DEFAULT_WEIGHTS_PER_CASE,
    CASE_CHECKS,
    sample_configuration,
    run_case,
    fuzz,
)

__all__ = [
    "CheckResult",
    "VerificationReport",
    "FuzzReport",
    "ALL_CHECKS",
    "MEMBERSHIP_DEGREE",
    "verify_theorem",
    "membership_check",
    "DEFAULT_BOUNDS",
    "SUPPORTED_BOUNDS",
    "DEFAULT_WEIGHTS_PER_CASE",
    "CASE_CHECKS",
    "sample_configuration",
    "run_case",
    "fuzz",
]
