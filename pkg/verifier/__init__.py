from .arrangement import ArrangementGraph
from .feasibility import FeasibilityReport, Violation, has_m_path, verify_instance

__all__ = ["ArrangementGraph", "FeasibilityReport", "Violation", "has_m_path", "verify_instance"]
