# coding=utf-8
"""
Abelianization and Alexander matrices of presentations
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

from knotradar.abelian import FinAbGroup, GroupElem, group_from_relations
from knotradar.ring import GroupRingElem

from .presentation import GroupPresentation
from .words import FreeCombination, FreeWord


def abelianize(p: GroupPresentation) -> Tuple[FinAbGroup, List[GroupElem]]:
    """
    H_1 of the presented group and the class of each generator

    Examples:
        >>> from knotradar.fox.presentation import presentation_from_words
        >>> H, ab = abelianize(presentation_from_words(["x", "y"], ["x x x x x"], "y"))
        >>> H
        FinAbGroup(rank=1, torsion=(5,))
    """
    rows = [w.exponent_sums(p.n_generators) for w in p.relators]
    group, q = group_from_relations(p.n_generators, rows)
    source = FinAbGroup(p.n_generators, ())
    return group, [q.apply(g) for g in source.basis()]


def word_class(word: FreeWord, ab: List[GroupElem], group: FinAbGroup) -> GroupElem:
    out = group.identity()
    for g, e in word.letters:
        out = out + ab[g] * e
    return out


def abelianize_combination(comb: FreeCombination, ab: List[GroupElem], group: FinAbGroup) -> GroupRingElem:
    terms: Dict[GroupElem, int] = {}
    for word, c in comb.items():
        key = word_class(word, ab, group)
        terms[key] = terms.get(key, 0) + c
    return GroupRingElem(group, terms)


def abelian_fox_derivative(word: FreeWord, j: int, ab: List[GroupElem], group: FinAbGroup) -> GroupRingElem:
    """The image of d word / d x_j in Z[H], accumulated along the word."""
    terms: Dict[GroupElem, int] = {}
    prefix = group.identity()
    for g, e in word.letters:
        if e < 0:
            prefix = prefix - ab[g]
        if g == j:
            terms[prefix] = terms.get(prefix, 0) + e
        if e > 0:
            prefix = prefix + ab[g]
    return GroupRingElem(group, terms)


@dataclass(frozen=True)
class AlexanderMatrix:
    group: FinAbGroup
    entries: Tuple[Tuple[GroupRingElem, ...], ...]
    column_generators: Tuple[str, ...]
    generator_classes: Tuple[GroupElem, ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.column_generators)

    def minor_without_column(self, j: int) -> List[List[GroupRingElem]]:
        return [[e for k, e in enumerate(row) if k != j] for row in self.entries]

    def row_identity_residuals(self) -> List[GroupRingElem]:
        """sum_j a_ij (x_j - 1) per row; each is zero for a genuine presentation."""
        one = GroupRingElem.one(self.group)
        out = []
        for row in self.entries:
            total = GroupRingElem.zero(self.group)
            for entry, cls in zip(row, self.generator_classes):
                total = total + entry * (GroupRingElem.monomial(cls) - one)
            out.append(total)
        return out


def alexander_matrix(p: GroupPresentation) -> AlexanderMatrix:
    group, ab = abelianize(p)
    entries = tuple(
        tuple(abelian_fox_derivative(r, j, ab, group) for j in range(p.n_generators))
        for r in p.relators
    )
    return AlexanderMatrix(group, entries, p.names, tuple(ab))
