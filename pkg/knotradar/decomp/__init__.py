# coding=utf-8
"""
Euler characteristic bounds, torsion differences and detection verdicts
"""

from knotradar.decomp.enhanced import (
    EnhancedChi,
    ChiReport,
    BoundCheck,
    CosetDifference,
    GreFile,
    report,
    bound_chain,
    difference_test,
    torsion_projection,
    format_laurent,
    parse_gre,
    format_gre,
    load_gre,
)
from knotradar.decomp.detection import (
    DetectionInput,
    detection_input,
    Verdict,
    classify,
    parse_detection,
    format_detection,
    load_detection,
    UNKNOT,
    GENUS_ONE_FIBRED,
    FIBRED_GENUS_N,
    FIBRED,
    INCONSISTENT,
    UNKNOWN,
)

__all__ = [
    # enhanced Euler characteristics
    "EnhancedChi",
    "ChiReport",
    "BoundCheck",
    "CosetDifference",
    "GreFile",
    "report",
    "bound_chain",
    "difference_test",
    "torsion_projection",
    "format_laurent",
    "parse_gre",
    "format_gre",
    "load_gre",
    # detection
    "DetectionInput",
    "detection_input",
    "Verdict",
    "classify",
    "parse_detection",
    "format_detection",
    "load_detection",
    "UNKNOT",
    "GENUS_ONE_FIBRED",
    "FIBRED_GENUS_N",
    "FIBRED",
    "INCONSISTENT",
    "UNKNOWN",
]
