# coding=utf-8
"""
Core: configuration loading and resolution helpers
"""

from knotradar.core.config import (
    resolve_jobs,
    resolve_output_format,
    parse_tau_assignments,
)
from knotradar.core.loader import load_config

__all__ = [
    "load_config",
    "resolve_jobs",
    "resolve_output_format",
    "parse_tau_assignments",
]
