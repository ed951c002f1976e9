# coding=utf-8
"""
Classes up to +-H and the symmetric canonical representative

PmClass compares group ring elements up to multiplication by +-h. The
canonical representative picks, inside such a class, the translate fixed by
the involution h -> h^-1, adjoining a square root of the meridian when the
centre of symmetry sits halfway between lattice points.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from knotradar.abelian import FinAbGroup, GroupElem, GroupHom, HalfLattice, half_extension
from knotradar.utils.errors import FiniteOrderElementError, GroupMismatchError, NotSymmetrizableError

from .element import GroupRingElem

logger = logging.getLogger(__name__)


def _two_torsion(group: FinAbGroup) -> List[GroupElem]:
    choices = [(0, d // 2) if d % 2 == 0 else (0,) for d in group.torsion]
    zeros = (0,) * group.rank
    return [GroupElem(group, zeros, tors) for tors in itertools.product(*choices)]


def _halve(group: FinAbGroup, target: GroupElem) -> Optional[GroupElem]:
    doubling = GroupHom(group, group, tuple(
        tuple(2 if i == j else 0 for j in range(group.dim)) for i in range(group.dim)
    ))
    return doubling.preimage(target)


def _symmetry_centres(x: GroupRingElem) -> List[GroupElem]:
    """All sigma with x(u) = x(sigma - u) for every u."""
    items = list(x.items())
    u0, c0 = items[0]
    centres: List[GroupElem] = []
    for u, c in items:
        if c != c0:
            continue
        sigma = u0 + u
        if sigma in centres:
            continue
        if all(x.coefficient(sigma - v) == cv for v, cv in items):
            centres.append(sigma)
    return centres


def _fix_sign(y: GroupRingElem) -> GroupRingElem:
    aug = y.augmentation()
    if aug:
        return -y if aug < 0 else y
    centre = y.coefficient(y.group.identity())
    if centre:
        return -y if centre < 0 else y
    _, first = next(y.items())
    return -y if first < 0 else y


@dataclass(frozen=True)
class CanonicalForm:
    """
    Canonical representative together with how it was reached

    element = +-shift * x, read over lattice.group when a half shift was
    needed (lattice is None otherwise).
    """

    element: GroupRingElem
    base: FinAbGroup
    shift: GroupElem
    sign: int
    lattice: Optional[HalfLattice] = None

    @property
    def is_half(self) -> bool:
        return self.lattice is not None

    def transport(self, h: GroupElem) -> GroupElem:
        """Image of a class of the base group in the canonical grading."""
        if h.group != self.base:
            raise GroupMismatchError(f"{h} is not in {self.base}")
        if self.lattice is not None:
            h = self.lattice.embed(h)
        return h + self.shift

    def axis(self, m: GroupElem) -> GroupElem:
        return self.lattice.embed(m) if self.lattice is not None else m


def canonical_form(x: GroupRingElem, m: GroupElem) -> CanonicalForm:
    """
    Symmetric translate of +-x with the shift used

    Raises:
        FiniteOrderElementError: m is torsion
        NotSymmetrizableError: no translate, even by a half power of m, is symmetric
    """
    if m.group != x.group:
        raise GroupMismatchError(f"meridian {m} is not in {x.group}")
    if not m.has_infinite_order:
        raise FiniteOrderElementError(f"meridian {m} has finite order")
    group = x.group
    if x.is_zero:
        return CanonicalForm(x, group, group.identity(), 1)

    centres = _symmetry_centres(x)
    if not centres:
        raise NotSymmetrizableError(f"{x} has no centre of symmetry")

    whole: List[Tuple[Tuple, CanonicalForm]] = []
    half: List[Tuple[Tuple, CanonicalForm]] = []
    lattice: Optional[HalfLattice] = None
    for sigma in centres:
        g = _halve(group, -sigma)
        if g is not None:
            for t in _two_torsion(group):
                y = x.translate(g + t)
                z = _fix_sign(y)
                form = CanonicalForm(z, group, g + t, 1 if z == y else -1)
                whole.append((z.sort_key(), form))
            continue
        if lattice is None:
            lattice = half_extension(group, m)
        lifted = x.map_keys(lattice.group, lattice.embed)
        g = _halve(lattice.group, lattice.embed(-sigma))
        if g is None:
            continue
        for t in _two_torsion(lattice.group):
            y = lifted.translate(g + t)
            z = _fix_sign(y)
            form = CanonicalForm(z, group, g + t, 1 if z == y else -1, lattice)
            half.append((z.sort_key(), form))

    pool = whole or half
    if not pool:
        raise NotSymmetrizableError(f"no half translate of {x} along {m} is symmetric")
    pool.sort(key=lambda item: item[0])
    form = pool[0][1]
    logger.debug("ring.canonical centres=%d half=%s", len(centres), form.is_half)
    return form


def canonical_rep(x: GroupRingElem, m: GroupElem) -> GroupRingElem:
    """
    Examples:
        >>> from knotradar.abelian import FinAbGroup
        >>> from knotradar.ring.literal import parse_ring_element
        >>> Z = FinAbGroup(1, ())
        >>> str(canonical_rep(parse_ring_element("t^3 - t^2 + t", Z), Z.element((1,))))
        't - 1 + t^-1'
    """
    return canonical_form(x, m).element


def _pm_normal_form(x: GroupRingElem) -> Tuple:
    if x.is_zero:
        return ()
    best = None
    for u in x.support():
        y = x.translate(-u)
        for z in (y, -y):
            key = z.sort_key()
            if best is None or key < best:
                best = key
    return best


class PmClass:
    """Element of Z[H] up to multiplication by +-h."""

    __slots__ = ("representative", "_normal")

    def __init__(self, representative: GroupRingElem):
        self.representative = representative
        self._normal = None

    @property
    def group(self) -> FinAbGroup:
        return self.representative.group

    def normal_form(self) -> Tuple:
        if self._normal is None:
            self._normal = _pm_normal_form(self.representative)
        return self._normal

    def norm(self):
        return self.representative.norm()

    def __eq__(self, other) -> bool:
        if not isinstance(other, PmClass):
            return NotImplemented
        return self.group == other.group and self.normal_form() == other.normal_form()

    def __hash__(self) -> int:
        return hash((self.group, self.normal_form()))

    def __repr__(self) -> str:
        return f"PmClass({self.representative})"

    def __str__(self) -> str:
        return str(self.representative)


def pm_equal(a: Union[PmClass, GroupRingElem], b: Union[PmClass, GroupRingElem]) -> bool:
    """
    True iff a = +-h * b for some h

    Examples:
        >>> from knotradar.abelian import FinAbGroup
        >>> from knotradar.ring.literal import parse_ring_element
        >>> Z = FinAbGroup(1, ())
        >>> pm_equal(parse_ring_element("t - 1 + t^-1", Z), parse_ring_element("-t^2 + t - 1", Z))
        True
    """
    a = a if isinstance(a, PmClass) else PmClass(a)
    b = b if isinstance(b, PmClass) else PmClass(b)
    if a.group != b.group:
        raise GroupMismatchError(f"{a.group} vs {b.group}")
    return a == b
