# coding=utf-8
"""
Integer geometry of the strip

Every arc of beta is drawn as an axis-aligned polyline (through arcs get one
slanted segment) on a grid scaled by six, so that arc vertices, basepoints
and cut curves never share a coordinate they could collide on:

- arc endpoints sit at x = 6 * position, on y = 0 (side "-") or y = H
- bottom rainbows peak at 5 + span, top rainbows dip to H - 5 - span
- through arcs rise to L = S + 10, slant to U = H - S - 10, then finish
- z sits at x = 6g + 2 and w at x = 6g + 4, near the side they are named from

S = 6p is one period and H = 2S + 40. A rainbow never spans a full period
in a valid diagram, so rainbows stay below L or above U.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .diagram import Arc, Endpoint, Mark, OneOneDiagram, Step

SCALE = 6

Point = Tuple[int, int]
Segment = Tuple[Point, Point]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def segment_crossing(beta: Segment, cut: Segment) -> Optional[Tuple[Fraction, int]]:
    """
    Proper crossing of two segments

    Returns the parameter along beta and the sign of cut x beta (direction
    vectors), or None when they do not cross in their interiors.
    """
    (p1, p2), (q1, q2) = beta, cut
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (q2[0] - q1[0], q2[1] - q1[1])
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    if denom == 0:
        return None
    wx, wy = q1[0] - p1[0], q1[1] - p1[1]
    t = Fraction(wx * d2[1] - wy * d2[0], denom)
    u = Fraction(wx * d1[1] - wy * d1[0], denom)
    if not (0 < t < 1 and 0 < u < 1):
        return None
    sign = d2[0] * d1[1] - d2[1] * d1[0]
    return t, (1 if sign > 0 else -1)


@dataclass(frozen=True)
class StripGeometry:
    p: int

    @property
    def period(self) -> int:
        return SCALE * self.p

    @property
    def height(self) -> int:
        return 2 * self.period + 40

    @property
    def low_bend(self) -> int:
        return self.period + 10

    @property
    def high_bend(self) -> int:
        return self.height - self.period - 10

    def side_height(self, side: str) -> int:
        return 0 if side == "-" else self.height

    def arc_polyline(self, arc: Arc) -> List[Point]:
        """Vertices from start to end, start at x = 6 * start.position."""
        x0, x1 = (SCALE * x for x in arc.lifted(self.p))
        H = self.height
        kind = arc.kind
        if kind == "bottom":
            h = 5 + abs(x1 - x0)
            return [(x0, 0), (x0, h), (x1, h), (x1, 0)]
        if kind == "top":
            h = H - 5 - abs(x1 - x0)
            return [(x0, H), (x0, h), (x1, h), (x1, H)]
        if arc.start.side == "-":
            return [(x0, 0), (x0, self.low_bend), (x1, self.high_bend), (x1, H)]
        return [(x0, H), (x0, self.high_bend), (x1, self.low_bend), (x1, 0)]

    def step_polyline(self, d: OneOneDiagram, step: Step) -> List[Point]:
        """Polyline of a traversal step in walking order, starting at its source."""
        arc = d.arcs[step.arc]
        if step.forward:
            return self.arc_polyline(arc)
        return self.arc_polyline(arc.reversed())

    def z_point(self, mark: Mark) -> Point:
        y = 4 if mark.side == "-" else self.height - 4
        return SCALE * mark.gap + 2, y

    def w_point(self, mark: Mark) -> Point:
        y = 2 if mark.side == "-" else self.height - 2
        return SCALE * mark.gap + 4, y

    def delta_path(self, z: Mark, w: Mark) -> List[Point]:
        """
        Arc from z to w inside the strip

        It climbs or drops from z to the height just inside w's side of the
        strip, then runs level to beside w. The last unit step into w meets
        no arc and is left out.
        """
        zx, zy = self.z_point(z)
        wx, _ = self.w_point(w)
        level = 3 if w.side == "-" else self.height - 3
        near = wx - 1 if wx > zx else wx + 1
        return [(zx, zy), (zx, level), (near, level)]


def polyline_segments(points: Sequence[Point]) -> Iterator[Segment]:
    for a, b in zip(points, points[1:]):
        if a != b:
            yield a, b


def translate(points: Sequence[Point], dx: int, dy: int = 0) -> List[Point]:
    return [(x + dx, y + dy) for x, y in points]


def x_range(points: Sequence[Point]) -> Tuple[int, int]:
    xs = [x for x, _ in points]
    return min(xs), max(xs)


def point_in_polygon(pt: Point, polygon: Sequence[Point]) -> bool:
    """
    Even-odd rule with a ray towards +x

    Exact in integers; the caller keeps pt off the polygon's vertices and
    edges.
    """
    x, y = pt
    inside = False
    n = len(polygon)
    for i in range(n):
        (x1, y1), (x2, y2) = polygon[i], polygon[(i + 1) % n]
        if (y1 > y) == (y2 > y):
            continue
        # x of the edge at height y compared with pt.x, without division
        lhs = (x2 - x1) * (y - y1)
        rhs = (x - x1) * (y2 - y1)
        if (y2 - y1) > 0:
            crosses = lhs > rhs
        else:
            crosses = lhs < rhs
        if crosses:
            inside = not inside
    return inside


def endpoint_point(geom: StripGeometry, e: Endpoint) -> Point:
    return SCALE * e.position, geom.side_height(e.side)
