from .oracle import OracleCaps, OracleResult, exact_gmmn
from .ratio import (
    CERTIFICATE, LOWER_BOUND, ORACLE, REFERENCES,
    RatioCase, RatioReport, RatioRow, algorithm_label, ratio_report, reference_cost,
)

__all__ = [
    "OracleCaps", "OracleResult", "exact_gmmn",
    "CERTIFICATE", "LOWER_BOUND", "ORACLE", "REFERENCES",
    "RatioCase", "RatioReport", "RatioRow", "algorithm_label", "ratio_report", "reference_cost",
]
