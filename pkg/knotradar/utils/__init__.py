# coding=utf-8
"""
Utility modules: error types and parameter validation
"""

from knotradar.utils.errors import (
    KnotRadarError,
    GroupMismatchError,
    InvalidHomomorphismError,
    NotDivisibleError,
    FiniteOrderElementError,
    NotSymmetrizableError,
    IndeterminateError,
    DiagramError,
    ParityError,
    NegativeBlockError,
    MalformedInputError,
    FileParseError,
    InvalidParameterError,
    ConfigurationError,
)

__all__ = [
    "KnotRadarError",
    "GroupMismatchError",
    "InvalidHomomorphismError",
    "NotDivisibleError",
    "FiniteOrderElementError",
    "NotSymmetrizableError",
    "IndeterminateError",
    "DiagramError",
    "ParityError",
    "NegativeBlockError",
    "MalformedInputError",
    "FileParseError",
    "InvalidParameterError",
    "ConfigurationError",
]
