"""Trailing-whitespace-agnostic edit distance and plaintext table detection."""

from ._core import (
    Algorithm,
    CostModel,
    DetectConfig,
    DistanceLimits,
    DistanceResult,
    NormalizationMode,
    ParseError,
    SizeLimitError,
    TableRegion,
    ValidationError,
    appendix_model,
    compute_distance,
    detect_tables,
    expand_tabs,
    levenshtein_standard,
    levenshtein_ws_agnostic,
    load_model,
    load_model_file,
    normalize_line,
    row_similarity,
    serialize,
    unit_model,
    ws_agnostic_naive,
    ws_agnostic_recursive_unit,
)

__all__ = [
    "Algorithm",
    "CostModel",
    "DetectConfig",
    "DistanceLimits",
    "DistanceResult",
    "NormalizationMode",
    "ParseError",
    "SizeLimitError",
    "TableRegion",
    "ValidationError",
    "appendix_model",
    "compute_distance",
    "detect_tables",
    "expand_tabs",
    "levenshtein_standard",
    "levenshtein_ws_agnostic",
    "load_model",
    "load_model_file",
    "normalize_line",
    "row_similarity",
    "serialize",
    "unit_model",
    "ws_agnostic_naive",
    "ws_agnostic_recursive_unit",
]
