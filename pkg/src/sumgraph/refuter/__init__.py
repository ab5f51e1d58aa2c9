"""Structural analysis and symbolic refutation of minimal labelings."""

from .analyze import POINT_NAMES, StructuralReport, ThresholdReport, analyze, term_struct, term_struct_thresholds
from .check import check_trace
from .engine import DEFAULT_NODE_LIMIT, NotRefuted, Refuted, refute_minimal
from .trace import RefutationTrace, TraceNode

__all__ = [
    "POINT_NAMES", "StructuralReport", "ThresholdReport", "analyze", "term_struct", "term_struct_thresholds",
    "DEFAULT_NODE_LIMIT", "check_trace", "NotRefuted", "RefutationTrace", "Refuted", "TraceNode", "refute_minimal"]
