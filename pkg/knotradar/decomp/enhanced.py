# coding=utf-8
"""
Enhanced Euler characteristics

An enhanced Euler characteristic is an element of Z[H] (H = H_1(M)) up to
+-H. Its norm bounds the dimension of the sutured homology from below and
is itself at least the norm of its torsion-free projection:

    dim >= |chi_en| >= |chi_gr|

For knot complements the canonical representatives of two knots with the
same H and meridian differ, over each <m>-coset, by (m - 1)^2 times a
Laurent polynomial in m.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

from knotradar.abelian import (
    FinAbGroup,
    GroupElem,
    GroupHom,
    format_group,
    free_projection,
    meridian_splitting,
    parse_group,
    quotient_by_element,
)
from knotradar.ring import (
    GroupRingElem,
    PmClass,
    canonical_form,
    default_names,
    format_ring_element,
    parse_ring_element,
    try_divide_exact,
)
from knotradar.ring.element import Coeff
from knotradar.utils.errors import (
    FileParseError,
    FiniteOrderElementError,
    GroupMismatchError,
    MalformedInputError,
)

logger = logging.getLogger(__name__)

LaurentData = Dict[int, Coeff]


@dataclass(frozen=True)
class EnhancedChi:
    group: FinAbGroup
    chi: PmClass
    meridian: Optional[GroupElem] = None
    names: Tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def of(cls, x: GroupRingElem, meridian: Optional[GroupElem] = None) -> "EnhancedChi":
        return cls(x.group, PmClass(x), meridian)

    @property
    def element(self) -> GroupRingElem:
        return self.chi.representative

    def display_names(self) -> List[str]:
        return list(self.names) or default_names(self.group)


def torsion_projection(group: FinAbGroup) -> GroupHom:
    """H -> Tors(H) forgetting the free coordinates."""
    target = FinAbGroup(0, group.torsion)
    k = len(group.torsion)
    matrix = tuple(
        tuple(1 if j == group.rank + i else 0 for j in range(group.dim))
        for i in range(k)
    )
    return GroupHom(group, target, matrix)


@dataclass(frozen=True)
class ChiReport:
    norm_en: Coeff
    chi_gr: PmClass
    norm_gr: Coeff
    torsion_split: Dict[GroupElem, GroupRingElem]
    h1_split: Optional[Dict[GroupElem, GroupRingElem]] = None


def report(e: EnhancedChi) -> ChiReport:
    """
    Norms and splittings of an enhanced Euler characteristic

    Examples:
        >>> from knotradar.ring import parse_ring_element
        >>> H = FinAbGroup(1, (5,))
        >>> x = parse_ring_element(
        ...     "1 + r + t + r*t + r^2*t - r^3*t - r^4*t + r*t^2 + r^2*t^2", H)
        >>> rep = report(EnhancedChi.of(x))
        >>> rep.norm_en, str(rep.chi_gr), rep.norm_gr
        (9, '2*t^2 + t + 2', 5)
    """
    x = e.element
    gr = x.pushforward(free_projection(e.group))
    split = x.coset_split(torsion_projection(e.group))
    h1_split = None
    if e.meridian is not None:
        _, q, _ = meridian_splitting(e.group, e.meridian)
        h1_split = x.coset_split(q)
    logger.debug("decomp.report norm_en=%s norm_gr=%s", x.norm(), gr.norm())
    return ChiReport(x.norm(), PmClass(gr), gr.norm(), split, h1_split)


@dataclass(frozen=True)
class BoundCheck:
    dim: int
    norm_en: Coeff
    norm_gr: Coeff

    @property
    def failing(self) -> Optional[str]:
        if self.dim < self.norm_en:
            return "first"
        if self.norm_en < self.norm_gr:
            return "second"
        return None

    @property
    def ok(self) -> bool:
        return self.failing is None

    @property
    def tight_first(self) -> bool:
        return self.dim == self.norm_en

    @property
    def tight_second(self) -> bool:
        return self.norm_en == self.norm_gr


def bound_chain(dim: int, e: EnhancedChi) -> BoundCheck:
    """dim >= |chi_en| >= |chi_gr|; a violation is reported, not raised."""
    rep = report(e)
    return BoundCheck(dim, rep.norm_en, rep.norm_gr)


@dataclass(frozen=True)
class CosetDifference:
    coset: GroupElem
    divisible: bool
    f: Optional[LaurentData]
    h: GroupElem


def _canonical(e: EnhancedChi):
    if e.meridian is None:
        raise MalformedInputError("difference test needs a meridian", suggestion="add a 'meridian:' line")
    form = canonical_form(e.element, e.meridian)
    return form.element, form.axis(e.meridian), form.lattice


def _m_steps(g: GroupElem, m: GroupElem) -> int:
    """k with g = k * m, for g in <m>."""
    for gi, mi in zip(g.free, m.free):
        if mi:
            return gi // mi
    raise FiniteOrderElementError(f"{m} has no free part")


def difference_test(chi1: EnhancedChi, chi2: EnhancedChi) -> List[CosetDifference]:
    """
    Divisibility of the difference of canonical representatives by (m - 1)^2

    Per <m>-coset the difference is written as (m - 1)^2 f(m) h with h the
    lowest class of the quotient; f is None when the division fails.

    Raises:
        GroupMismatchError: different groups or meridians
        MalformedInputError: a meridian is missing
    """
    if chi1.group != chi2.group or chi1.meridian != chi2.meridian:
        raise GroupMismatchError(
            "difference test needs the same group and meridian",
            suggestion="identify H_1 and the meridian classes of both knots first",
        )
    x1, m1, lat1 = _canonical(chi1)
    x2, m2, lat2 = _canonical(chi2)
    if lat1 is not None and lat2 is None:
        x2 = x2.map_keys(lat1.group, lat1.embed)
        m2 = m1
    elif lat2 is not None and lat1 is None:
        x1 = x1.map_keys(lat2.group, lat2.embed)
        m1 = m2
    group, m = x1.group, m1
    _, q = quotient_by_element(group, m)
    diff = x1 - x2
    cosets = sorted({q(g) for g in x1.support() + x2.support()}, key=lambda g: g.sort_key())
    parts = diff.coset_split(q)
    supports = {**x2.coset_split(q), **x1.coset_split(q)}
    out: List[CosetDifference] = []
    for s in cosets:
        part = parts.get(s, GroupRingElem.zero(group))
        quotient = try_divide_exact(part, m, 2)
        if quotient is None:
            base = part
        elif quotient.is_zero:
            base = supports[s]
        else:
            base = quotient
        keys = base.support()
        ref = keys[0]
        h = min(keys, key=lambda g: _m_steps(g - ref, m))
        f = None
        if quotient is not None:
            f = {_m_steps(g - h, m): c for g, c in quotient.items()}
        out.append(CosetDifference(s, quotient is not None, f, h))
    logger.debug("decomp.difference cosets=%d divisible=%d", len(out), sum(c.divisible for c in out))
    return out


def format_laurent(f: Optional[LaurentData], var: str = "m") -> str:
    """
    Examples:
        >>> format_laurent({1: 1, -1: 2})
        'm + 2*m^-1'
        >>> format_laurent({})
        '0'
    """
    if f is None:
        return "-"
    Z = FinAbGroup(1, ())
    x = GroupRingElem(Z, {Z.element((k,)): c for k, c in f.items()})
    return format_ring_element(x, [var])


# ---------------------------------------------------------------------------
# .gre files
# ---------------------------------------------------------------------------

_KEY_RE = re.compile(r"^([a-z]+):\s*(.*)$")


@dataclass(frozen=True)
class GreFile:
    chi: EnhancedChi
    dim: Optional[int] = None
    compare: Optional[EnhancedChi] = None


def parse_gre(text: str, file_path: str = "<string>") -> GreFile:
    """
    Parse the ``.gre`` format

    ``group:`` and ``element:`` are required; ``names:``, ``meridian:`` (a
    monomial), ``dim:`` and ``compare:`` (a second element for the
    difference test) are optional.

    Raises:
        FileParseError: malformed line or literal
    """
    fields: Dict[str, Tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        match = _KEY_RE.match(line)
        if not match:
            raise FileParseError(file_path, lineno, 1, f"expected 'key: value', got {line!r}")
        key = match.group(1)
        if key not in ("group", "names", "meridian", "element", "dim", "compare"):
            raise FileParseError(file_path, lineno, 1, f"unknown key {key!r}")
        if key in fields:
            raise FileParseError(file_path, lineno, 1, f"duplicate {key} line")
        fields[key] = (lineno, match.group(2).strip())
    for key in ("group", "element"):
        if key not in fields:
            raise FileParseError(file_path, 1, 1, f"missing '{key}:' line")

    lineno, value = fields["group"]
    try:
        group = parse_group(value)
    except ValueError as e:
        raise FileParseError(file_path, lineno, 1, str(e)) from None
    names: Sequence[str] = default_names(group)
    if "names" in fields:
        lineno, value = fields["names"]
        names = value.split()
        if len(names) != group.dim:
            raise FileParseError(file_path, lineno, 1, f"{len(names)} names for a group of dimension {group.dim}")

    def literal(key: str) -> GroupRingElem:
        lineno, value = fields[key]
        try:
            return parse_ring_element(value, group, names)
        except ValueError as e:
            raise FileParseError(file_path, lineno, 1, str(e)) from None

    meridian = None
    if "meridian" in fields:
        x = literal("meridian")
        items = list(x.items())
        if len(items) != 1 or items[0][1] != 1:
            raise FileParseError(file_path, fields["meridian"][0], 1, "meridian must be a monomial")
        meridian = items[0][0]
    dim = None
    if "dim" in fields:
        lineno, value = fields["dim"]
        if not value.isdigit():
            raise FileParseError(file_path, lineno, 1, f"dim {value!r} is not a non-negative integer")
        dim = int(value)
    chi = EnhancedChi(group, PmClass(literal("element")), meridian, tuple(names))
    compare = None
    if "compare" in fields:
        compare = EnhancedChi(group, PmClass(literal("compare")), meridian, tuple(names))
    return GreFile(chi, dim, compare)


def load_gre(path: Union[str, Path]) -> GreFile:
    path = Path(path)
    return parse_gre(path.read_text(encoding="utf-8"), str(path))


def format_gre(gre: GreFile) -> str:
    e = gre.chi
    names = e.display_names()
    lines = [f"group: {format_group(e.group)}", f"names: {' '.join(names)}"]
    if e.meridian is not None:
        lines.append(f"meridian: {format_ring_element(GroupRingElem.monomial(e.meridian), names)}")
    lines.append(f"element: {format_ring_element(e.element, names)}")
    if gre.dim is not None:
        lines.append(f"dim: {gre.dim}")
    if gre.compare is not None:
        lines.append(f"compare: {format_ring_element(gre.compare.element, names)}")
    return "\n".join(lines) + "\n"
