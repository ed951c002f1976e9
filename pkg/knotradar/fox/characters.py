# coding=utf-8
"""
Division by (h - 1) through the characters of the torsion subgroup

For H = Z + T, Q[H] splits over the characters chi of T into Laurent rings
Q(zeta)[s, s^-1]. In each component h - 1 becomes zeta^a s^k - 1, whose
leading coefficient is a unit, so division is exact there. The quotient is
recombined by the inverse Fourier transform over T and must come out
integral. Cyclotomic integers are sympy polynomials reduced modulo the
cyclotomic polynomial.
"""

import itertools
import logging
from typing import Dict, List, Tuple

from sympy import Poly, Symbol, ZZ, cyclotomic_poly

from knotradar.abelian import FinAbGroup, GroupElem
from knotradar.ring import GroupRingElem, divide_exact
from knotradar.utils.errors import (
    FiniteOrderElementError,
    GroupMismatchError,
    IndeterminateError,
    NotDivisibleError,
)

logger = logging.getLogger(__name__)

_ZETA = Symbol("zeta")


class CyclotomicRing:
    """Z[zeta_n] as Z[zeta] / Phi_n."""

    def __init__(self, n: int):
        self.n = n
        self.modulus = Poly(cyclotomic_poly(n, _ZETA), _ZETA, domain=ZZ)
        self.zero = Poly(0, _ZETA, domain=ZZ)
        self._powers = [Poly(_ZETA ** k, _ZETA, domain=ZZ).rem(self.modulus) for k in range(n)]

    def power(self, k: int) -> Poly:
        return self._powers[k % self.n]

    def reduce(self, p: Poly) -> Poly:
        return p.rem(self.modulus)

    def as_integer(self, p: Poly):
        """The integer p represents, or None when p is not rational."""
        p = self.reduce(p)
        if p.is_zero:
            return 0
        if p.degree() > 0:
            return None
        return int(p.coeff_monomial(1))


def _characters(torsion: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    return list(itertools.product(*[range(d) for d in torsion]))


def _pairing(char: Tuple[int, ...], tors: Tuple[int, ...], torsion: Tuple[int, ...], n: int) -> int:
    """Exponent of zeta_n in chi(t)."""
    return sum(c * t * (n // d) for c, t, d in zip(char, tors, torsion)) % n


def _divide_component(ring: CyclotomicRing, x: Dict[int, Poly], k: int, lead_exp: int) -> Dict[int, Poly]:
    """Divide by zeta^lead_exp * s^k - 1 in Z[zeta][s, s^-1]."""
    x = {deg: c for deg, c in x.items() if not c.is_zero}
    q: Dict[int, Poly] = {}
    inverse = ring.power(-lead_exp)
    while x:
        top, bottom = max(x), min(x)
        if top - bottom < k:
            raise IndeterminateError("character component is not divisible by (h - 1)")
        lead = ring.reduce(x.pop(top) * inverse)
        qdeg = top - k
        q[qdeg] = ring.reduce(q.get(qdeg, ring.zero) + lead)
        rest = ring.reduce(x.get(qdeg, ring.zero) + lead)
        if rest.is_zero:
            x.pop(qdeg, None)
        else:
            x[qdeg] = rest
    return q


def divide_by_characters(x: GroupRingElem, h: GroupElem) -> GroupRingElem:
    """
    q in Z[H] with (h - 1) q = x, for H of rank one

    Raises:
        FiniteOrderElementError: h is torsion
        IndeterminateError: no integral quotient exists
    """
    group: FinAbGroup = x.group
    if h.group != group:
        raise GroupMismatchError(f"{h} is not in {group}")
    if group.rank != 1:
        raise IndeterminateError(f"character division needs rank one, got {group}")
    if not h.has_infinite_order:
        raise FiniteOrderElementError(f"{h} has finite order")
    k = h.free[0]
    if k < 0:
        # h - 1 = -h (h^-1 - 1)
        return -divide_by_characters(x, -h).translate(-h)
    if not group.torsion:
        try:
            return divide_exact(x, h, 1)
        except NotDivisibleError as e:
            raise IndeterminateError(f"{x} is not divisible by ({h} - 1)") from e

    torsion = group.torsion
    n = torsion[-1]
    order = _torsion_order(torsion)
    ring = CyclotomicRing(n)
    chars = _characters(torsion)
    items = list(x.items())

    quotients: Dict[Tuple[int, ...], Dict[int, Poly]] = {}
    for char in chars:
        comp: Dict[int, Poly] = {}
        for g, c in items:
            term = ring.power(_pairing(char, g.torsion, torsion, n)) * int(c)
            comp[g.free[0]] = comp.get(g.free[0], ring.zero) + term
        comp = {deg: ring.reduce(p) for deg, p in comp.items()}
        quotients[char] = _divide_component(ring, comp, k, _pairing(char, h.torsion, torsion, n))

    degrees = sorted({deg for q in quotients.values() for deg in q})
    terms: Dict[GroupElem, int] = {}
    for deg in degrees:
        for tors in itertools.product(*[range(d) for d in torsion]):
            acc = ring.zero
            for char, q in quotients.items():
                part = q.get(deg)
                if part is None:
                    continue
                acc = acc + part * ring.power(-_pairing(char, tors, torsion, n))
            value = ring.as_integer(acc)
            if value is None or value % order:
                raise IndeterminateError(
                    f"character recombination is not integral at degree {deg}, torsion {tors}"
                )
            if value:
                terms[group.element((deg,), tors)] = value // order

    result = GroupRingElem(group, terms)
    check = (GroupRingElem.monomial(h) - 1) * result
    if check != x:
        raise IndeterminateError("recombined quotient fails the product check")
    logger.debug("fox.characters divided chars=%d degrees=%d", len(chars), len(degrees))
    return result


def _torsion_order(torsion: Tuple[int, ...]) -> int:
    out = 1
    for d in torsion:
        out *= d
    return out
