# coding=utf-8
"""
Doubly pointed genus-one Heegaard diagrams

The torus is cut along alpha into an annulus whose universal cover is the
strip R x [0, 1]. The p intersection points of alpha and beta sit at
positions 0..p-1 on both boundary lines: side "-" is the bottom copy of
alpha, side "+" the top copy. beta becomes p disjoint arcs; each arc joins
two boundary points and its winding counts how many periods its end lies
to the right of its start once lifted.

A basepoint is named by a gap (the stretch of alpha between positions g
and g + 1) seen from one side. Every complementary region touches alpha,
so every region has such a name.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from knotradar.utils.errors import DiagramError, FileParseError

logger = logging.getLogger(__name__)

SIDES = ("+", "-")

_P_RE = re.compile(r"^p:\s*(-?\d+)$")
_ARC_RE = re.compile(r"^arc:\s*([+-]\d+)\s+([+-]\d+)\s+w=(-?\d+)$")
_MARK_RE = re.compile(r"^([zw]):\s*gap\s+(-?\d+)\s+([+-])$")


@dataclass(frozen=True, order=True)
class Endpoint:
    side: str
    position: int

    @classmethod
    def parse(cls, text: str) -> "Endpoint":
        """
        Examples:
            >>> Endpoint.parse("-2")
            Endpoint(side='-', position=2)
        """
        if len(text) < 2 or text[0] not in SIDES or not text[1:].isdigit():
            raise ValueError(f"bad endpoint {text!r}")
        return cls(text[0], int(text[1:]))

    def __str__(self) -> str:
        return f"{self.side}{self.position}"


@dataclass(frozen=True)
class Arc:
    start: Endpoint
    end: Endpoint
    winding: int = 0

    @property
    def kind(self) -> str:
        """"bottom" or "top" for arcs returning to one side, else "through"."""
        if self.start.side == self.end.side:
            return "bottom" if self.start.side == "-" else "top"
        return "through"

    def lifted(self, p: int) -> Tuple[int, int]:
        """x coordinates of both ends with the start at its own position."""
        return self.start.position, self.end.position + self.winding * p

    def reversed(self) -> "Arc":
        return Arc(self.end, self.start, -self.winding)

    def __str__(self) -> str:
        return f"{self.start} {self.end} w={self.winding}"


@dataclass(frozen=True, order=True)
class Mark:
    gap: int
    side: str

    def label(self) -> Tuple[str, int]:
        return self.side, self.gap

    def __str__(self) -> str:
        return f"gap {self.gap} {self.side}"


@dataclass(frozen=True)
class OneOneDiagram:
    p: int
    arcs: Tuple[Arc, ...]
    z: Mark
    w: Mark

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(self.arcs))

    def endpoint_index(self) -> Dict[Endpoint, Tuple[int, bool]]:
        """Endpoint -> (arc index, True when it is the arc's start)."""
        out: Dict[Endpoint, Tuple[int, bool]] = {}
        for i, arc in enumerate(self.arcs):
            out.setdefault(arc.start, (i, True))
            out.setdefault(arc.end, (i, False))
        return out

    def partner(self, e: Endpoint) -> Endpoint:
        i, is_start = self.endpoint_index()[e]
        arc = self.arcs[i]
        return arc.end if is_start else arc.start

    def relabeled(self, shift: int) -> "OneOneDiagram":
        """The same diagram with every position moved by shift (mod p)."""
        p = self.p

        def move(e: Endpoint) -> Tuple[Endpoint, int]:
            pos = e.position + shift
            return Endpoint(e.side, pos % p), pos // p

        arcs = []
        for arc in self.arcs:
            start, ws = move(arc.start)
            end, we = move(arc.end)
            arcs.append(Arc(start, end, arc.winding + we - ws))
        return OneOneDiagram(
            p,
            tuple(arcs),
            Mark((self.z.gap + shift) % p, self.z.side),
            Mark((self.w.gap + shift) % p, self.w.side),
        )


# ---------------------------------------------------------------------------
# file format
# ---------------------------------------------------------------------------

def parse_diagram(text: str, file_path: str = "<string>") -> OneOneDiagram:
    """
    Parse the ``.od`` format

    Lines are ``p: N``, ``arc: <end> <end> w=<winding>`` (p of them),
    ``z: gap <g> <side>`` and ``w: gap <g> <side>``. Blank lines and lines
    starting with ``#`` are ignored. Only syntax is checked here; call
    validate for the diagram invariants.

    Raises:
        FileParseError: malformed or missing line
    """
    p: Optional[int] = None
    arcs: List[Arc] = []
    marks: Dict[str, Mark] = {}
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        column = len(raw) - len(raw.lstrip()) + 1
        m = _P_RE.match(line)
        if m:
            if p is not None:
                raise FileParseError(file_path, lineno, column, "duplicate p line")
            p = int(m.group(1))
            continue
        m = _ARC_RE.match(line)
        if m:
            try:
                start, end = Endpoint.parse(m.group(1)), Endpoint.parse(m.group(2))
            except ValueError as e:
                raise FileParseError(file_path, lineno, column, str(e)) from None
            arcs.append(Arc(start, end, int(m.group(3))))
            continue
        m = _MARK_RE.match(line)
        if m:
            name = m.group(1)
            if name in marks:
                raise FileParseError(file_path, lineno, column, f"duplicate {name} line")
            marks[name] = Mark(int(m.group(2)), m.group(3))
            continue
        raise FileParseError(file_path, lineno, column, f"unrecognised line {line!r}")

    end_line = len(lines) + 1
    if p is None:
        raise FileParseError(file_path, end_line, 1, "missing 'p:' line")
    for name in ("z", "w"):
        if name not in marks:
            raise FileParseError(file_path, end_line, 1, f"missing '{name}:' line")
    return OneOneDiagram(p, tuple(arcs), marks["z"], marks["w"])


def format_diagram(d: OneOneDiagram) -> str:
    lines = [f"p: {d.p}"]
    lines.extend(f"arc: {arc}" for arc in d.arcs)
    lines.append(f"z: {d.z}")
    lines.append(f"w: {d.w}")
    return "\n".join(lines) + "\n"


def load_diagram(path: Union[str, Path]) -> OneOneDiagram:
    path = Path(path)
    return parse_diagram(path.read_text(encoding="utf-8"), str(path))


# ---------------------------------------------------------------------------
# beta as a closed curve
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Step:
    """One arc of beta, walked from source to target."""

    arc: int
    forward: bool
    source: Endpoint
    target: Endpoint
    shift: int

    @property
    def point(self) -> int:
        return self.target.position

    @property
    def sign(self) -> int:
        """+1 when beta leaves the strip upward through alpha at the target."""
        return 1 if self.target.side == "+" else -1


@dataclass(frozen=True)
class BetaTraversal:
    steps: Tuple[Step, ...]
    order: Tuple[int, ...]
    signs: Tuple[int, ...]

    @property
    def algebraic_intersection(self) -> int:
        return sum(self.signs)


def _walk(d: OneOneDiagram) -> Tuple[List[Step], bool]:
    index = d.endpoint_index()
    current = Endpoint("-", 0)
    steps: List[Step] = []
    closed = False
    while len(steps) < d.p:
        i, is_start = index[current]
        arc = d.arcs[i]
        x0, x1 = arc.lifted(d.p)
        if is_start:
            step = Step(i, True, arc.start, arc.end, x1 - x0)
        else:
            step = Step(i, False, arc.end, arc.start, x0 - x1)
        steps.append(step)
        if step.target == Endpoint("+", 0):
            closed = True
            break
        current = Endpoint("-" if step.target.side == "+" else "+", step.target.position)
    return steps, closed


def traverse(d: OneOneDiagram) -> BetaTraversal:
    """
    Walk beta from point 0, leaving it upward

    Raises:
        DiagramError: beta closes up before meeting every point ("cycle")
    """
    steps, closed = _walk(d)
    if not closed or len(steps) != d.p:
        raise DiagramError("cycle", f"beta closes after {len(steps)} of {d.p} arcs")
    order = (0,) + tuple(step.point for step in steps[:-1])
    signs = [0] * d.p
    signs[0] = 1
    for step in steps[:-1]:
        signs[step.point] = step.sign
    return BetaTraversal(tuple(steps), order, tuple(signs))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _check_range(d: OneOneDiagram) -> None:
    if d.p < 1:
        raise DiagramError("range", f"p must be at least 1, got {d.p}")
    if len(d.arcs) != d.p:
        raise DiagramError("range", f"{len(d.arcs)} arcs for p = {d.p}")
    for arc in d.arcs:
        for e in (arc.start, arc.end):
            if e.side not in SIDES or not 0 <= e.position < d.p:
                raise DiagramError("range", f"endpoint {e} outside 0..{d.p - 1}")
    for name, mark in (("z", d.z), ("w", d.w)):
        if mark.side not in SIDES or not 0 <= mark.gap < d.p:
            raise DiagramError("range", f"{name} mark {mark} outside 0..{d.p - 1}")


def _check_matching(d: OneOneDiagram) -> None:
    seen: Dict[Endpoint, int] = {}
    for i, arc in enumerate(d.arcs):
        for e in (arc.start, arc.end):
            if e in seen:
                raise DiagramError("matching", f"endpoint {e} used by arcs {seen[e]} and {i}")
            seen[e] = i


def _boundary_key(side: str, x: int) -> Tuple[int, int]:
    # bottom line left to right, then top line right to left
    return (0, x) if side == "-" else (1, -x)


def _chord(arc: Arc, p: int, offset: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    x0, x1 = arc.lifted(p)
    a = _boundary_key(arc.start.side, x0 + offset)
    b = _boundary_key(arc.end.side, x1 + offset)
    return (a, b) if a < b else (b, a)


def _interleaved(c1, c2) -> bool:
    lo, hi = c1
    inside = [lo < key < hi for key in c2]
    return inside[0] != inside[1]


def _check_embedding(d: OneOneDiagram) -> None:
    p = d.p
    spans = []
    for arc in d.arcs:
        x0, x1 = arc.lifted(p)
        spans.append((min(x0, x1), max(x0, x1)))
    for i, a in enumerate(d.arcs):
        ca = _chord(a, p, 0)
        for j in range(i, len(d.arcs)):
            b = d.arcs[j]
            lo = (spans[i][0] - spans[j][1]) // p - 1
            hi = (spans[i][1] - spans[j][0]) // p + 1
            for k in range(lo, hi + 1):
                if i == j and k == 0:
                    continue
                if _interleaved(ca, _chord(b, p, k * p)):
                    raise DiagramError(
                        "embedding",
                        f"arc {i} ({a}) crosses arc {j} ({b}) translated by {k} periods",
                    )


def validate(d: OneOneDiagram) -> None:
    """
    Check the diagram invariants in a fixed order

    range, matching, embedding, cycle, homology, marks; the first failure
    is raised.

    Raises:
        DiagramError: with the name of the violated invariant
    """
    _check_range(d)
    _check_matching(d)
    _check_embedding(d)
    beta = traverse(d)
    if beta.algebraic_intersection == 0:
        raise DiagramError("homology", "alpha . beta = 0, so Y has infinite first homology")
    if d.z == d.w:
        raise DiagramError("marks", f"z and w are both at {d.z}")
    logger.debug("heegaard.validate ok p=%d", d.p)


def is_valid(d: OneOneDiagram) -> bool:
    try:
        validate(d)
    except DiagramError:
        return False
    return True


# ---------------------------------------------------------------------------
# complementary regions
# ---------------------------------------------------------------------------

def _gap_after(p: int, e: Endpoint) -> Tuple[str, int]:
    # the gap that continues a region boundary after running along an arc to e
    if e.side == "-":
        return "-", e.position
    return "+", (e.position - 1) % p


def _next_gap(d: OneOneDiagram, index: Dict[Endpoint, Tuple[int, bool]], label: Tuple[str, int]) -> Tuple[str, int]:
    side, g = label
    corner = Endpoint("-", (g + 1) % d.p) if side == "-" else Endpoint("+", g)
    i, is_start = index[corner]
    arc = d.arcs[i]
    return _gap_after(d.p, arc.end if is_start else arc.start)


def regions(d: OneOneDiagram) -> List[Tuple[Tuple[str, int], ...]]:
    """
    Complementary regions of alpha and beta as cycles of gap labels

    Each region is listed by the (side, gap) labels along its boundary,
    starting from its smallest label; regions are sorted.

    Examples:
        >>> d = parse_diagram("p: 1\\narc: -0 +0 w=0\\nz: gap 0 -\\nw: gap 0 +\\n")
        >>> regions(d)
        [(('+', 0), ('-', 0))]
    """
    index = d.endpoint_index()
    seen = set()
    out = []
    for side in SIDES:
        for g in range(d.p):
            label = (side, g)
            if label in seen:
                continue
            cycle = []
            while label not in seen:
                seen.add(label)
                cycle.append(label)
                label = _next_gap(d, index, label)
            start = cycle.index(min(cycle))
            out.append(tuple(cycle[start:] + cycle[:start]))
    out.sort()
    return out


def region_of(d: OneOneDiagram, mark: Mark) -> int:
    """Index into regions(d) of the region containing mark."""
    for i, region in enumerate(regions(d)):
        if mark.label() in region:
            return i
    raise DiagramError("range", f"mark {mark} is not adjacent to alpha")


def normalize_mark(d: OneOneDiagram, mark: Mark) -> Mark:
    """The smallest gap label naming the same region."""
    side, gap = regions(d)[region_of(d, mark)][0]
    return Mark(gap, side)
