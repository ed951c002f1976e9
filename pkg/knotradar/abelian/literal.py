# coding=utf-8
"""
Group and element literals

Groups print as ``Z^2 x Z/5 x Z/10`` (``Z`` for rank one, ``0`` for the
trivial group); elements print as ``(a1,a2 | b1,b2)``.
"""

import re
from typing import List

from .groups import FinAbGroup, GroupElem

_FREE_RE = re.compile(r"^Z(?:\^(\d+))?$")
_TORSION_RE = re.compile(r"^Z/(\d+)$")


def format_group(group: FinAbGroup) -> str:
    """
    Examples:
        >>> format_group(FinAbGroup(1, (5,)))
        'Z x Z/5'
        >>> format_group(FinAbGroup(0, ()))
        '0'
    """
    parts: List[str] = []
    if group.rank == 1:
        parts.append("Z")
    elif group.rank > 1:
        parts.append(f"Z^{group.rank}")
    parts.extend(f"Z/{d}" for d in group.torsion)
    return " x ".join(parts) if parts else "0"


def parse_group(text: str) -> FinAbGroup:
    """
    Parse a group literal; factors may come in any order and are normalized

    Raises:
        ValueError: unknown factor or broken divisor chain

    Examples:
        >>> parse_group("Z^1 x Z/5")
        FinAbGroup(rank=1, torsion=(5,))
        >>> parse_group("Z/2 x Z/3")
        FinAbGroup(rank=0, torsion=(6,))
    """
    text = text.strip()
    if text in ("0", "1", ""):
        return FinAbGroup(0, ())
    rank = 0
    cyclic: List[int] = []
    for raw in text.split(" x "):
        token = raw.strip().replace(" ", "")
        m = _FREE_RE.match(token)
        if m:
            rank += int(m.group(1)) if m.group(1) is not None else 1
            continue
        m = _TORSION_RE.match(token)
        if m:
            d = int(m.group(1))
            if d == 0:
                rank += 1
            elif d > 1:
                cyclic.append(d)
            continue
        raise ValueError(f"unknown group factor: {raw.strip()!r}")
    if not cyclic:
        return FinAbGroup(rank, ())
    # arbitrary cyclic factors -> invariant factors
    from .groups import group_from_relations

    rows = []
    for i, d in enumerate(cyclic):
        row = [0] * len(cyclic)
        row[i] = d
        rows.append(row)
    torsion_group, _ = group_from_relations(len(cyclic), rows)
    return FinAbGroup(rank, torsion_group.torsion)


def format_element(g: GroupElem) -> str:
    """
    Examples:
        >>> H = FinAbGroup(1, (5,))
        >>> format_element(H.element((2,), (7,)))
        '(2 | 2)'
    """
    free = ",".join(str(a) for a in g.free)
    tors = ",".join(str(b) for b in g.torsion)
    return f"({free} | {tors})".replace("( |", "(|").replace("| )", "|)")


def parse_element(group: FinAbGroup, text: str) -> GroupElem:
    """
    Examples:
        >>> parse_element(FinAbGroup(1, (5,)), "(1 | 6)").torsion
        (1,)
    """
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")) or "|" not in body:
        raise ValueError(f"element literal must look like (a,.. | b,..): {text!r}")
    free_txt, tors_txt = body[1:-1].split("|", 1)

    def _ints(chunk: str) -> List[int]:
        chunk = chunk.strip()
        return [int(v) for v in chunk.split(",")] if chunk else []

    free, tors = _ints(free_txt), _ints(tors_txt)
    if len(free) != group.rank or len(tors) != len(group.torsion):
        raise ValueError(f"element {text!r} does not fit {format_group(group)}")
    return GroupElem(group, tuple(free), tuple(tors))
