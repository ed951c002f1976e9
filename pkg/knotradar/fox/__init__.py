# coding=utf-8
"""
Free differential calculus, Alexander matrices and knot complement torsion
"""

from knotradar.fox.words import (
    FreeWord,
    fox_derivative,
    fundamental_identity_residual,
)
from knotradar.fox.presentation import (
    GroupPresentation,
    parse_presentation,
    format_presentation,
    load_presentation,
    presentation_from_words,
    conjugate_relator,
    invert_relator,
    multiply_relators,
    substitute_generator,
)
from knotradar.fox.determinant import DET_METHODS, determinant
from knotradar.fox.alexander import (
    AlexanderMatrix,
    abelianize,
    alexander_matrix,
    abelianize_combination,
    word_class,
)
from knotradar.fox.characters import CyclotomicRing, divide_by_characters
from knotradar.fox.torsion import (
    TuraevTorsion,
    turaev_torsion,
    torsion_from_column,
    valid_columns,
    meridian_class,
    sutured_torsion,
    sutured_torsion_element,
)

__all__ = [
    # words
    "FreeWord",
    "fox_derivative",
    "fundamental_identity_residual",
    # presentations
    "GroupPresentation",
    "parse_presentation",
    "format_presentation",
    "load_presentation",
    "presentation_from_words",
    "conjugate_relator",
    "invert_relator",
    "multiply_relators",
    "substitute_generator",
    # matrices
    "DET_METHODS",
    "determinant",
    "AlexanderMatrix",
    "abelianize",
    "alexander_matrix",
    "abelianize_combination",
    "word_class",
    # torsion
    "CyclotomicRing",
    "divide_by_characters",
    "TuraevTorsion",
    "turaev_torsion",
    "torsion_from_column",
    "valid_columns",
    "meridian_class",
    "sutured_torsion",
    "sutured_torsion_element",
]
