# coding=utf-8
"""
Exact division by (h - 1)^k in Z[H]

For h of infinite order a unimodular change of the free basis makes
h = s^k * tau with s a free generator and tau torsion. Z[H] is then the
Laurent ring R[s, s^-1] over R = Z[remaining free part + torsion], and
tau * s^k - 1 has a unit leading coefficient, so long division is exact.
"""

import logging
from typing import Dict, List, Optional, Tuple

from knotradar.abelian import FinAbGroup, GroupElem, smith_normal_form, unimodular_inverse
from knotradar.abelian.smith import IntMatrix, matvec
from knotradar.utils.errors import FiniteOrderElementError, GroupMismatchError, NotDivisibleError

from .element import Coeff, GroupRingElem, Vector

logger = logging.getLogger(__name__)

# degree along s -> (remaining coordinates -> coefficient)
Laurent = Dict[int, Dict[Vector, Coeff]]


def _basis_change(h: GroupElem) -> Tuple[IntMatrix, IntMatrix, int]:
    """Unimodular U with U * free(h) = (k, 0, ..., 0), k > 0, and its inverse."""
    column = [[a] for a in h.free]
    diag, left, _right = smith_normal_form(column)
    u = [list(row) for row in left]
    if matvec(u, h.free)[0] < 0:
        u[0] = [-v for v in u[0]]
    k = matvec(u, h.free)[0]
    return u, unimodular_inverse(u), k


class _Frame:
    """Coordinates in which h = s^k * tau."""

    def __init__(self, h: GroupElem):
        if not h.has_infinite_order:
            raise FiniteOrderElementError(f"{h} has finite order; (h - 1) is a zero divisor")
        self.group: FinAbGroup = h.group
        self.u, self.u_inv, self.k = _basis_change(h)
        self.tau: Vector = h.torsion

    def to_laurent(self, x: GroupRingElem) -> Laurent:
        r = self.group.rank
        out: Laurent = {}
        for vec, c in x.vector_items():
            new_free = matvec(self.u, vec[:r])
            out.setdefault(new_free[0], {})[tuple(new_free[1:]) + vec[r:]] = c
        return out

    def from_laurent(self, data: Laurent, allow_half: bool) -> GroupRingElem:
        r = self.group.rank
        terms: Dict[Vector, Coeff] = {}
        for deg, part in data.items():
            for rest, c in part.items():
                old_free = matvec(self.u_inv, [deg] + list(rest[: r - 1]))
                terms[tuple(old_free) + rest[r - 1:]] = c
        return GroupRingElem.from_vectors(self.group, terms, allow_half)

    def untwist(self, part: Dict[Vector, Coeff]) -> Dict[Vector, Coeff]:
        """Multiply an R-coefficient by tau^-1."""
        if not self.tau:
            return dict(part)
        r = self.group.rank
        out = {}
        for rest, c in part.items():
            tors = tuple((b - t) % d for b, t, d in zip(rest[r - 1:], self.tau, self.group.torsion))
            out[rest[: r - 1] + tors] = c
        return out

    def degrees(self, x: GroupRingElem) -> List[int]:
        return sorted(self.to_laurent(x))


def _add_into(target: Dict[Vector, Coeff], part: Dict[Vector, Coeff], sign: int = 1) -> None:
    for key, c in part.items():
        v = target.get(key, 0) + sign * c
        if v:
            target[key] = v
        else:
            target.pop(key, None)


def _divide_once(frame: _Frame, x: Laurent) -> Laurent:
    x = {deg: dict(part) for deg, part in x.items() if part}
    q: Laurent = {}
    k = frame.k
    while x:
        top, bottom = max(x), min(x)
        if top - bottom < k:
            raise NotDivisibleError(f"nonzero remainder of s-width {top - bottom}")
        lead = frame.untwist(x.pop(top))
        qdeg = top - k
        _add_into(q.setdefault(qdeg, {}), lead)
        # x - lead * s^qdeg * (tau s^k - 1): the top cancels, lead moves down
        _add_into(x.setdefault(qdeg, {}), lead)
        if not x[qdeg]:
            del x[qdeg]
    return {deg: part for deg, part in q.items() if part}


def divide_exact(x: GroupRingElem, h: GroupElem, power: int = 1) -> GroupRingElem:
    """
    Return q with (h - 1)^power * q = x

    Raises:
        FiniteOrderElementError: h is torsion
        NotDivisibleError: the remainder is nonzero

    Examples:
        >>> from knotradar.abelian import FinAbGroup
        >>> from knotradar.ring.literal import parse_ring_element
        >>> Z = FinAbGroup(1, ())
        >>> str(divide_exact(parse_ring_element("t - 2 + t^-1", Z), Z.element((1,)), 2))
        't^-1'
    """
    if h.group != x.group:
        raise GroupMismatchError(f"{h} is not in {x.group}")
    if power < 1:
        raise ValueError("power must be positive")
    frame = _Frame(h)
    data = frame.to_laurent(x)
    for step in range(power):
        try:
            data = _divide_once(frame, data)
        except NotDivisibleError as e:
            logger.debug("ring.divide not_divisible step=%d/%d", step + 1, power)
            raise NotDivisibleError(f"{x} is not divisible by ({h} - 1)^{power}: {e.message}") from None
    return frame.from_laurent(data, x.allow_half)


def try_divide_exact(x: GroupRingElem, h: GroupElem, power: int = 1) -> Optional[GroupRingElem]:
    """divide_exact returning None instead of raising NotDivisibleError."""
    try:
        return divide_exact(x, h, power)
    except NotDivisibleError:
        return None


def m_degree_range(x: GroupRingElem, m: GroupElem) -> Optional[Tuple[int, int]]:
    """
    (lowest, highest) exponent of the s-direction through m, None for zero

    For a split meridian (free part +-1) these are m-degrees.
    """
    if x.is_zero:
        return None
    frame = _Frame(m)
    degs = frame.degrees(x)
    return degs[0], degs[-1]
