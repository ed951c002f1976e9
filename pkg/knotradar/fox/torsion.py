# coding=utf-8
"""
Torsion of knot complements from deficiency-one presentations

With the Alexander matrix A ((n-1) x n over Z[H]) and a column j whose
generator x_j has infinite order, the torsion is D_j / (x_j - 1) where D_j
is the determinant of A without column j. It is carried as that quotient;
the sutured torsion (m - 1) * tau lands in Z[H].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from knotradar.abelian import FinAbGroup, GroupElem
from knotradar.ring import GroupRingElem, PmClass, pm_equal, try_divide_exact
from knotradar.utils.errors import FiniteOrderElementError, IndeterminateError

from .alexander import AlexanderMatrix, abelianize, alexander_matrix, word_class
from .characters import divide_by_characters
from .determinant import determinant
from .presentation import GroupPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TuraevTorsion:
    """numerator / (denominator - 1), or numerator alone when denominator is None."""

    group: FinAbGroup
    numerator: GroupRingElem
    denominator: Optional[GroupElem]
    column: int

    def _cross(self, other: "TuraevTorsion") -> Tuple[GroupRingElem, GroupRingElem]:
        left = self.numerator
        right = other.numerator
        if other.denominator is not None:
            left = left * (GroupRingElem.monomial(other.denominator) - 1)
        if self.denominator is not None:
            right = right * (GroupRingElem.monomial(self.denominator) - 1)
        return left, right

    def equivalent(self, other: "TuraevTorsion") -> bool:
        """Equal up to +-H, compared by cross-multiplication."""
        if self.group != other.group:
            return False
        left, right = self._cross(other)
        return pm_equal(left, right)

    def times_meridian_minus_one(self, m: GroupElem) -> GroupRingElem:
        """
        (m - 1) * tau as an element of Z[H]

        Raises:
            FiniteOrderElementError: m is torsion
            IndeterminateError: the quotient is not integral
        """
        if not m.has_infinite_order:
            raise FiniteOrderElementError(f"meridian {m} has finite order")
        one = GroupRingElem.one(self.group)
        if self.denominator is None:
            return self.numerator * (GroupRingElem.monomial(m) - one)
        if self.denominator == m:
            return self.numerator
        if self.denominator == -m:
            # m^-1 - 1 = -m^-1 (m - 1)
            return -self.numerator.translate(m)
        product = self.numerator * (GroupRingElem.monomial(m) - one)
        q = try_divide_exact(product, self.denominator)
        if q is not None:
            return q
        if self.group.torsion:
            logger.info("fox.torsion character_path column=%d", self.column)
            return divide_by_characters(product, self.denominator)
        raise IndeterminateError(f"(m - 1) * tau is not integral for column {self.column}")

    def __str__(self) -> str:
        if self.denominator is None:
            return str(self.numerator)
        return f"({self.numerator}) / ({GroupRingElem.monomial(self.denominator)} - 1)"


def valid_columns(p: GroupPresentation) -> list:
    _, ab = abelianize(p)
    return [j for j, g in enumerate(ab) if g.has_infinite_order]


def torsion_from_column(matrix: AlexanderMatrix, j: int, method: str = "bird") -> TuraevTorsion:
    group = matrix.group
    xj = matrix.generator_classes[j]
    if not xj.has_infinite_order:
        raise IndeterminateError(f"column {j} generator has finite order")
    d = determinant(matrix.minor_without_column(j), group, method)
    q = try_divide_exact(d, xj)
    if q is not None:
        return TuraevTorsion(group, q, None, j)
    return TuraevTorsion(group, d, xj, j)


def turaev_torsion(p: GroupPresentation, column: Optional[int] = None, method: str = "bird") -> TuraevTorsion:
    """
    Torsion of the presented knot complement

    Args:
        p: deficiency-one presentation with H_1 of rank one
        column: force a column; default prefers the meridian generator
        method: determinant method, "bird" or "laplace"

    Raises:
        IndeterminateError: wrong deficiency or rank, or no valid column
    """
    if p.deficiency != 1:
        raise IndeterminateError(
            f"torsion needs deficiency one, got {p.n_generators} generators and {len(p.relators)} relators",
            suggestion="add or drop relators so that there is exactly one more generator",
        )
    matrix = alexander_matrix(p)
    if matrix.group.rank != 1:
        raise IndeterminateError(f"torsion needs first Betti number one, H = {matrix.group}")
    columns = [j for j, g in enumerate(matrix.generator_classes) if g.has_infinite_order]
    if not columns:
        raise IndeterminateError("no generator abelianizes to an infinite-order element")
    if column is None:
        mj = p.meridian_generator()
        column = mj if mj in columns else columns[0]
    elif column not in columns:
        raise IndeterminateError(f"column {column} is not valid; choose one of {columns}")
    tau = torsion_from_column(matrix, column, method)
    logger.debug("fox.torsion column=%d reduced=%s", column, tau.denominator is None)
    return tau


def meridian_class(p: GroupPresentation) -> Tuple[FinAbGroup, GroupElem]:
    group, ab = abelianize(p)
    return group, word_class(p.meridian, ab, group)


def sutured_torsion_element(p: GroupPresentation, method: str = "bird") -> Tuple[GroupRingElem, GroupElem]:
    """(m - 1) * tau together with the meridian class."""
    tau = turaev_torsion(p, method=method)
    _, m = meridian_class(p)
    return tau.times_meridian_minus_one(m), m


def sutured_torsion(p: GroupPresentation, method: str = "bird") -> PmClass:
    """(m - 1) * tau up to +-H."""
    element, _ = sutured_torsion_element(p, method)
    return PmClass(element)
