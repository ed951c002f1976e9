# coding=utf-8
"""
knotradar - exact torsion, (1,1) knot Floer homology and detection checks

Usage:
  python -m knotradar hfk11 fixtures/trefoil.od
  knotradar batch fixtures/
"""

__version__ = "0.3.0"

from knotradar.context import AppContext  # noqa: E402

__all__ = ["AppContext", "__version__"]
