# coding=utf-8
"""
Knot Floer chain complexes of (1,1) diagrams

Generators are the p intersection points. The differential counts empty
embedded bigons mod 2, the Z/2 grading is the local intersection sign and
the Alexander grading takes values in H_1 of the knot complement.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from knotradar.abelian import FinAbGroup, GroupElem
from knotradar.ring import CanonicalForm, GroupRingElem, PmClass, canonical_form
from knotradar.utils.errors import NotSymmetrizableError

from .bigons import Bigon, find_bigons
from .diagram import OneOneDiagram, traverse
from .presentation import intersection_classes

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Generator:
    position: int
    sign: int
    h1_class: GroupElem

    @property
    def z2(self) -> int:
        return 0 if self.sign > 0 else 1


@dataclass(frozen=True)
class FloerComplex:
    """differential[x][y] is the coefficient of y in the boundary of x."""

    group: FinAbGroup
    meridian: GroupElem
    generators: Tuple[Generator, ...]
    differential: Tuple[Tuple[int, ...], ...]
    bigons: Tuple[Bigon, ...] = field(default=(), compare=False)

    def entries(self) -> List[Tuple[int, int]]:
        return [
            (x, y)
            for x, row in enumerate(self.differential)
            for y, v in enumerate(row)
            if v
        ]

    def squares_to_zero(self) -> bool:
        n = len(self.generators)
        d = self.differential
        for x in range(n):
            for z in range(n):
                total = 0
                for y in range(n):
                    total ^= d[x][y] & d[y][z]
                if total:
                    return False
        return True

    def respects_gradings(self) -> bool:
        """Every entry preserves the Alexander class and flips the Z/2 grading."""
        for x, y in self.entries():
            gx, gy = self.generators[x], self.generators[y]
            if gx.h1_class != gy.h1_class or gx.z2 == gy.z2:
                return False
        return True


def _gf2_rank(rows: Sequence[Sequence[int]]) -> int:
    basis: List[int] = []
    for row in rows:
        v = 0
        for bit in row:
            v = (v << 1) | (bit & 1)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def differential(d: OneOneDiagram, periods: Optional[int] = None) -> FloerComplex:
    """Chain complex of a valid diagram; periods overrides the bigon search depth."""
    beta = traverse(d)
    group, meridian, classes = intersection_classes(d)
    generators = tuple(
        Generator(pos, beta.signs[pos], classes[pos]) for pos in range(d.p)
    )
    bigons = find_bigons(d, periods)
    matrix = [[0] * d.p for _ in range(d.p)]
    for bigon in bigons:
        matrix[bigon.source][bigon.target] ^= 1
    cx = FloerComplex(
        group,
        meridian,
        generators,
        tuple(tuple(row) for row in matrix),
        tuple(bigons),
    )
    logger.info("heegaard.complex p=%d bigons=%d entries=%d", d.p, len(bigons), len(cx.entries()))
    return cx


def z2_grading(d: OneOneDiagram) -> Tuple[int, ...]:
    """
    Local sign of alpha and beta at each point, indexed by position

    beta is oriented so that it crosses alpha upward at point 0.
    """
    return traverse(d).signs


def relative_h1_grading(d: OneOneDiagram) -> Tuple[Tuple[GroupElem, ...], ...]:
    """g[x][y]: class of the one-cycle running along beta from x to y and back along alpha."""
    _, _, classes = intersection_classes(d)
    return tuple(tuple(cy - cx for cy in classes) for cx in classes)


def homology(cx: FloerComplex) -> Dict[GroupElem, int]:
    """
    Homology dimension per Alexander class

    Over F_2 with d^2 = 0 the homology of a block has dimension
    n - 2 * rank(d) once d is restricted to the block.
    """
    blocks: Dict[GroupElem, List[int]] = {}
    for i, g in enumerate(cx.generators):
        blocks.setdefault(g.h1_class, []).append(i)
    out: Dict[GroupElem, int] = {}
    for cls in sorted(blocks, key=lambda g: g.sort_key()):
        idx = blocks[cls]
        rows = [[cx.differential[x][y] for y in idx] for x in idx]
        dim = len(idx) - 2 * _gf2_rank(rows)
        if dim:
            out[cls] = dim
    return out


@dataclass(frozen=True)
class HFKResult:
    group: FinAbGroup
    meridian: GroupElem
    raw: GroupRingElem
    chi: PmClass
    relative_table: Dict[GroupElem, int]
    canonical: Optional[CanonicalForm] = None
    table: Optional[Dict[GroupElem, int]] = None
    z2: Tuple[int, ...] = ()

    @property
    def total(self) -> int:
        return sum(self.relative_table.values())


def euler_char(d: OneOneDiagram, cx: Optional[FloerComplex] = None) -> HFKResult:
    """
    Graded Euler characteristic and homology table

    The table is read in the canonical (symmetric) Alexander grading; when
    no symmetric translate exists only the class up to +-H is returned.
    The Z/2 gradings are flipped globally when the canonical form needed a
    sign change, so the symmetric centre carries the positive sign.
    """
    cx = cx if cx is not None else differential(d)
    terms: Dict[GroupElem, int] = {}
    for g in cx.generators:
        terms[g.h1_class] = terms.get(g.h1_class, 0) + g.sign
    raw = GroupRingElem(cx.group, terms)
    relative = homology(cx)
    signs = tuple(g.sign for g in cx.generators)
    try:
        form = canonical_form(raw, cx.meridian)
    except NotSymmetrizableError as e:
        logger.warning("heegaard.euler_char not_symmetrizable p=%d: %s", d.p, e.message)
        return HFKResult(cx.group, cx.meridian, raw, PmClass(raw), relative, z2=signs)
    table = {form.transport(h): dim for h, dim in relative.items()}
    return HFKResult(
        cx.group,
        cx.meridian,
        raw,
        PmClass(raw),
        relative,
        form,
        table,
        tuple(s * form.sign for s in signs),
    )


@dataclass(frozen=True)
class KhiCertificate:
    upper: int
    lower: int

    @property
    def certified(self) -> bool:
        return self.upper == self.lower


def khi_certificate(d: OneOneDiagram, result: Optional[HFKResult] = None) -> KhiCertificate:
    """Instanton knot homology is squeezed between the norm of chi and dim HFK."""
    result = result if result is not None else euler_char(d)
    return KhiCertificate(result.total, int(result.chi.norm()))
