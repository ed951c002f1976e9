# coding=utf-8
"""
Empty embedded bigons in the universal cover

Lifted to the plane, alpha becomes the horizontal lines y = nH and beta one
embedded curve. A bigon runs along beta from crossing a to crossing b on
the same line and back along that line; it counts when the alpha stretch
between the corners meets beta nowhere between a and b, both corners are
convex, and no lift of z or w lies inside.

Every period of beta climbs by (alpha . beta) * H, which is nonzero, so a
piece of beta that returns to its starting line spans at most p + 1
periods. Searching W = sum|winding| + p + 2 periods past each start is
therefore exhaustive.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .diagram import OneOneDiagram, traverse
from .geometry import Point, StripGeometry, point_in_polygon

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Bigon:
    source: int
    target: int
    start: int
    end: int
    above: bool


@dataclass(frozen=True)
class Crossing:
    vertex: int
    x: int
    y: int
    position: int


@dataclass
class BetaLift:
    points: List[Point]
    crossings: List[Crossing]


def search_periods(d: OneOneDiagram) -> int:
    return sum(abs(arc.winding) for arc in d.arcs) + d.p + 2


def lift_beta(d: OneOneDiagram, geom: StripGeometry, periods: int) -> BetaLift:
    """beta walked periods times around, starting at point 0 on the line y = 0."""
    steps = traverse(d).steps
    points: List[Point] = [(0, 0)]
    crossings = [Crossing(0, 0, 0, 0)]
    x, y = 0, 0
    for s in range(periods * d.p):
        step = steps[s % d.p]
        poly = geom.step_polyline(d, step)
        sx, sy = poly[0]
        dx, dy = x - sx, y - sy
        points.extend((px + dx, py + dy) for px, py in poly[1:])
        x, y = points[-1]
        crossings.append(Crossing(len(points) - 1, x, y, step.point))
    return BetaLift(points, crossings)


def _mark_inside(polygon: Sequence[Point], mark: Point, geom: StripGeometry) -> bool:
    xs = [px for px, _ in polygon]
    ys = [py for _, py in polygon]
    period, height = geom.period, geom.height
    mx, my = mark
    for k in range((min(xs) - mx) // period, (max(xs) - mx) // period + 1):
        for n in range((min(ys) - my) // height, (max(ys) - my) // height + 1):
            if point_in_polygon((mx + k * period, my + n * height), polygon):
                return True
    return False


def _bigon(
    lift: BetaLift,
    a: Crossing,
    b: Crossing,
    marks: Sequence[Point],
    geom: StripGeometry,
    ia: int,
    ib: int,
) -> Optional[Bigon]:
    polygon = lift.points[a.vertex: b.vertex + 1]
    left = min(a.x, b.x)
    above = point_in_polygon((left + 1, a.y + 1), polygon)
    leaves_up = lift.points[a.vertex + 1][1] > a.y
    arrives_from_above = lift.points[b.vertex - 1][1] > b.y
    if leaves_up != above or arrives_from_above != above:
        return None
    for mark in marks:
        if _mark_inside(polygon, mark, geom):
            return None
    left_pos, right_pos = (a.position, b.position) if a.x < b.x else (b.position, a.position)
    if above:
        return Bigon(left_pos, right_pos, ia, ib, True)
    return Bigon(right_pos, left_pos, ia, ib, False)


def find_bigons(d: OneOneDiagram, periods: Optional[int] = None) -> List[Bigon]:
    """
    All empty embedded bigons, one per class under the deck group

    Args:
        d: a valid diagram
        periods: search depth in periods of beta; defaults to search_periods(d)

    The source is the corner the alpha side leaves from when the boundary
    is run with the disk on the left.
    """
    geom = StripGeometry(d.p)
    depth = search_periods(d) if periods is None else periods
    lift = lift_beta(d, geom, depth + 1)
    marks = [geom.z_point(d.z), geom.w_point(d.w)]
    found: List[Bigon] = []
    for ia in range(d.p):
        a = lift.crossings[ia]
        lo: Optional[int] = None
        hi: Optional[int] = None
        for ib in range(ia + 1, min(ia + depth * d.p, len(lift.crossings) - 1) + 1):
            b = lift.crossings[ib]
            if b.y != a.y:
                continue
            if (lo is None or b.x > lo) and (hi is None or b.x < hi):
                bigon = _bigon(lift, a, b, marks, geom, ia, ib)
                if bigon is not None:
                    found.append(bigon)
            if b.x < a.x:
                lo = b.x if lo is None else max(lo, b.x)
            else:
                hi = b.x if hi is None else min(hi, b.x)
    logger.debug("heegaard.bigons p=%d periods=%d found=%d", d.p, depth, len(found))
    return found
