# coding=utf-8
"""
Knot Floer homology of doubly pointed genus-one Heegaard diagrams
"""

from knotradar.heegaard.diagram import (
    Arc,
    Endpoint,
    Mark,
    OneOneDiagram,
    BetaTraversal,
    parse_diagram,
    format_diagram,
    load_diagram,
    traverse,
    validate,
    is_valid,
    regions,
    region_of,
    normalize_mark,
)
from knotradar.heegaard.presentation import (
    read_presentation,
    knot_complement_homology,
    intersection_classes,
)
from knotradar.heegaard.bigons import Bigon, find_bigons, search_periods
from knotradar.heegaard.complex import (
    Generator,
    FloerComplex,
    HFKResult,
    KhiCertificate,
    differential,
    z2_grading,
    relative_h1_grading,
    homology,
    euler_char,
    khi_certificate,
)
from knotradar.heegaard.families import simple_knot

__all__ = [
    # diagrams
    "Arc",
    "Endpoint",
    "Mark",
    "OneOneDiagram",
    "BetaTraversal",
    "parse_diagram",
    "format_diagram",
    "load_diagram",
    "traverse",
    "validate",
    "is_valid",
    "regions",
    "region_of",
    "normalize_mark",
    # knot group
    "read_presentation",
    "knot_complement_homology",
    "intersection_classes",
    # complex
    "Bigon",
    "find_bigons",
    "search_periods",
    "Generator",
    "FloerComplex",
    "HFKResult",
    "KhiCertificate",
    "differential",
    "z2_grading",
    "relative_h1_grading",
    "homology",
    "euler_char",
    "khi_certificate",
    "simple_knot",
]
