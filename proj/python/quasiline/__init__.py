"""Quasiline arrangements and generalized wiring diagrams."""

from ._core import (
    Error,
    IncidenceStructure,
    PermSequence,
    WiringDiagram,
    classify,
    diagram_from_lines,
    diagram_from_sequence,
    drawing_svg,
    fingerprint,
    map_scheme,
    map_summary,
    realize,
    sequence_from_diagram,
    straighten,
    sweep_order,
    topological_unwanted_bound,
    wiring_svg,
)

__all__ = [
    "Error",
    "IncidenceStructure",
    "PermSequence",
    "WiringDiagram",
    "classify",
    "diagram_from_lines",
    "diagram_from_sequence",
    "drawing_svg",
    "fingerprint",
    "map_scheme",
    "map_summary",
    "realize",
    "sequence_from_diagram",
    "straighten",
    "sweep_order",
    "topological_unwanted_bound",
    "wiring_svg",
]
