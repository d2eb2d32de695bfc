"""Expertise and self-awareness synergy analysis (C++ core)."""

from ._core import (
    ValidationError,
    analyze,
    catalog,
    classify,
    diagram_dot,
    enumerate,
    load_project,
    scatter_svg,
    table,
    validate,
)

__all__ = [
    "ValidationError",
    "analyze",
    "catalog",
    "classify",
    "diagram_dot",
    "enumerate",
    "load_project",
    "scatter_svg",
    "table",
    "validate",
]
