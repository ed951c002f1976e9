# coding=utf-8
"""
Group ring element literals

A literal is a signed list of monomials such as ``3*t^2*r - 1/2*t^-1``.
Generator names follow the basis of the group (free generators first, then
torsion generators). Over a HalfLattice the axis exponent may be a half,
printed as ``t^1/2``; when the axis is not a basis generator the square
root prints as its own factor (``m^1/2``).
"""

import re
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from knotradar.abelian import FinAbGroup, GroupElem, HalfLattice

from .element import Coeff, GroupRingElem

_FREE_NAMES = ["t", "u", "v", "w"]
_TORSION_NAMES = ["r", "s", "q"]
_TERM_SPLIT = re.compile(r"(?<!\^)(?=[+-])")
_FACTOR_RE = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+)(?:/(\d+))?)?$")
_COEFF_RE = re.compile(r"^(\d+)(?:/(\d+))?$")
AXIS_NAME = "m"


def default_names(group: FinAbGroup) -> List[str]:
    """
    Examples:
        >>> default_names(FinAbGroup(1, (5,)))
        ['t', 'r']
    """
    if group.rank <= len(_FREE_NAMES):
        free = _FREE_NAMES[: group.rank]
    else:
        free = [f"x{i + 1}" for i in range(group.rank)]
    k = len(group.torsion)
    tors = _TORSION_NAMES[:k] if k <= len(_TORSION_NAMES) else [f"y{i + 1}" for i in range(k)]
    return free + tors


def _axis_index(lattice: HalfLattice) -> Optional[int]:
    vec = lattice.axis.vector
    if sorted(vec) == [0] * (len(vec) - 1) + [1]:
        return vec.index(1)
    return None


def _format_coeff(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _format_exponent(halves: int) -> str:
    if halves % 2 == 0:
        return str(halves // 2)
    return f"{halves}/2"


def _monomial_factors(
    key: GroupElem, names: Sequence[str], lattice: Optional[HalfLattice]
) -> Tuple[List[str], Tuple]:
    """Printable factors and an ordering key (base vector with halves)."""
    if lattice is None:
        vec = key.vector
        halves = [2 * v for v in vec]
        extra = 0
    else:
        h, e = lattice.split(key)
        vec = h.vector
        halves = [2 * v for v in vec]
        axis = _axis_index(lattice)
        extra = 0
        if axis is not None:
            halves[axis] += e
        else:
            extra = e
    factors = []
    for name, hv in zip(names, halves):
        if hv == 0:
            continue
        factors.append(name if hv == 2 else f"{name}^{_format_exponent(hv)}")
    if extra:
        factors.append(f"{AXIS_NAME}^1/2")
    return factors, (tuple(halves), extra)


def format_ring_element(
    x: GroupRingElem,
    names: Optional[Sequence[str]] = None,
    lattice: Optional[HalfLattice] = None,
) -> str:
    """
    Print terms in descending key order

    Examples:
        >>> from knotradar.abelian import FinAbGroup
        >>> Z = FinAbGroup(1, ())
        >>> t = GroupRingElem.monomial(Z.element((1,)))
        >>> format_ring_element(t * t - 3 * t + 2)
        't^2 - 3*t + 2'
    """
    if lattice is not None and x.group != lattice.group:
        lattice = None
    base = lattice.base if lattice is not None else x.group
    names = list(names) if names is not None else default_names(base)
    if len(names) != base.dim:
        raise ValueError(f"{len(names)} names given for a group of dimension {base.dim}")
    if x.is_zero:
        return "0"

    rendered = []
    for g, c in x.items():
        factors, order = _monomial_factors(g, names, lattice)
        rendered.append((order, factors, c))
    rendered.sort(key=lambda item: item[0], reverse=True)

    out = []
    for i, (_, factors, c) in enumerate(rendered):
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if factors:
            body = "*".join(factors) if mag == 1 else _format_coeff(mag) + "*" + "*".join(factors)
        else:
            body = _format_coeff(mag)
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def parse_ring_element(
    text: str,
    group: FinAbGroup,
    names: Optional[Sequence[str]] = None,
    lattice: Optional[HalfLattice] = None,
    allow_half: bool = False,
) -> GroupRingElem:
    """
    Parse a literal produced by format_ring_element

    Args:
        text: the literal
        group: base group whose generators the names refer to
        names: generator names, defaults to default_names(group)
        lattice: half lattice over group; permits half exponents on the axis
        allow_half: permit half-integer coefficients

    Raises:
        ValueError: unknown generator, malformed term or bad exponent

    Examples:
        >>> from knotradar.abelian import FinAbGroup
        >>> x = parse_ring_element("t - 1 + t^-1", FinAbGroup(1, ()))
        >>> str(x)
        't - 1 + t^-1'
    """
    names = list(names) if names is not None else default_names(group)
    if len(names) != group.dim:
        raise ValueError(f"{len(names)} names given for a group of dimension {group.dim}")
    index = {name: i for i, name in enumerate(names)}
    axis = _axis_index(lattice) if lattice is not None else None
    target = lattice.group if lattice is not None else group

    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty literal")
    if compact == "0":
        return GroupRingElem.zero(target)

    terms: Dict[GroupElem, Coeff] = {}
    has_half_coeff = False
    for raw in _TERM_SPLIT.split(compact):
        if not raw:
            continue
        sign = -1 if raw[0] == "-" else 1
        body = raw[1:] if raw[0] in "+-" else raw
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        pieces = body.split("*")
        coeff: Coeff = 1
        cm = _COEFF_RE.match(pieces[0])
        if cm:
            coeff = int(cm.group(1)) if cm.group(2) is None else Fraction(int(cm.group(1)), int(cm.group(2)))
            pieces = pieces[1:]
        if isinstance(coeff, Fraction) and coeff.denominator != 1:
            has_half_coeff = True

        exps = [0] * group.dim
        halves = 0
        for piece in pieces:
            fm = _FACTOR_RE.match(piece)
            if not fm:
                raise ValueError(f"malformed factor {piece!r} in {text!r}")
            name, num, den = fm.group(1), fm.group(2), fm.group(3)
            num_i = int(num) if num is not None else 1
            if den is not None and den != "2":
                raise ValueError(f"exponent {num}/{den} is not a half")
            half_units = num_i if den is not None else 2 * num_i
            if lattice is not None and name == AXIS_NAME and axis is None:
                halves += half_units
                continue
            if name not in index:
                raise ValueError(f"unknown generator {name!r}")
            i = index[name]
            if lattice is not None and i == axis:
                halves += half_units
            elif half_units % 2:
                raise ValueError(f"half exponent on {name!r} needs a half lattice along it")
            else:
                exps[i] += half_units // 2

        h = group.from_vector(exps)
        key = lattice.embed(h) + lattice.root * halves if lattice is not None else h
        terms[key] = terms.get(key, 0) + sign * coeff

    return GroupRingElem(target, terms, allow_half=allow_half or has_half_coeff)
