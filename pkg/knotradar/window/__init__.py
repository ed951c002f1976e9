# coding=utf-8
"""
Integer bookkeeping of stabilized grading windows
"""

from knotradar.window.bounds import (
    PLUS,
    MINUS,
    WindowParams,
    WindowReport,
    BlockSums,
    bounds,
    window_constants,
    block_sums,
    identity_suite,
    scan,
)

__all__ = [
    "PLUS",
    "MINUS",
    "WindowParams",
    "WindowReport",
    "BlockSums",
    "bounds",
    "window_constants",
    "block_sums",
    "identity_suite",
    "scan",
]
