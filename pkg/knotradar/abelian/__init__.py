# coding=utf-8
"""
Finitely generated abelian groups, homomorphisms and Smith normal form
"""

from knotradar.abelian.smith import (
    smith_normal_form,
    solve_integer_system,
    unimodular_inverse,
    integer_det,
)
from knotradar.abelian.groups import (
    FinAbGroup,
    GroupElem,
    GroupHom,
    HalfLattice,
    group_from_relations,
    quotient_by_element,
    free_projection,
    inclusion_of_torsion,
    meridian_splitting,
    m_coordinate,
    half_extension,
)
from knotradar.abelian.literal import (
    format_group,
    parse_group,
    format_element,
    parse_element,
)

__all__ = [
    # Smith normal form
    "smith_normal_form",
    "solve_integer_system",
    "unimodular_inverse",
    "integer_det",
    # groups
    "FinAbGroup",
    "GroupElem",
    "GroupHom",
    "HalfLattice",
    "group_from_relations",
    "quotient_by_element",
    "free_projection",
    "inclusion_of_torsion",
    "meridian_splitting",
    "m_coordinate",
    "half_extension",
    # literals
    "format_group",
    "parse_group",
    "format_element",
    "parse_element",
]
