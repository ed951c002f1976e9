# coding=utf-8
"""
Group rings Z[H] over finitely generated abelian groups
"""

from knotradar.ring.element import (
    GroupRingElem,
    norm,
    pushforward,
    coset_split,
    sum_elements,
)
from knotradar.ring.division import divide_exact, try_divide_exact, m_degree_range
from knotradar.ring.canonical import (
    CanonicalForm,
    PmClass,
    canonical_form,
    canonical_rep,
    pm_equal,
)
from knotradar.ring.literal import default_names, format_ring_element, parse_ring_element

__all__ = [
    "GroupRingElem",
    "norm",
    "pushforward",
    "coset_split",
    "sum_elements",
    # division
    "divide_exact",
    "try_divide_exact",
    "m_degree_range",
    # classes up to +-H
    "CanonicalForm",
    "PmClass",
    "canonical_form",
    "canonical_rep",
    "pm_equal",
    # literals
    "default_names",
    "format_ring_element",
    "parse_ring_element",
]
