"""Polya groups, conductors and related invariants of Lehmer quintic fields."""

from .errors import ConsistencyError, FactorizationError, MagnitudeError, PerfectSquareError
from .lehmer import decompose_m, field_invariants, m_value, theta_index
from .polya import PolyaReport, classify, monogenicity_report, polya_group_order

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "FactorizationError",
    "MagnitudeError",
    "PerfectSquareError",
    "PolyaReport",
    "classify",
    "decompose_m",
    "field_invariants",
    "m_value",
    "monogenicity_report",
    "polya_group_order",
    "theta_index",
]
