# coding=utf-8
"""
Knot group presentations read off a (1,1) diagram

The twice punctured torus has free fundamental group, dual to a cut system
of three curves meeting only at the punctures: nu (the vertical circle
through w), eta (the horizontal circle through w) and delta (an arc from z
to w inside the strip). A closed curve is read as a word by listing its
crossings with them (a, b, c respectively). Gluing the two handlebodies
kills alpha and beta, so the knot group is <a, b, c | a, beta>; a small
circle around z crosses delta once and nothing else, so the meridian is c.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Tuple

from knotradar.abelian import FinAbGroup, GroupElem
from knotradar.fox import FreeWord, GroupPresentation, abelianize, word_class

from .diagram import OneOneDiagram, Step, traverse
from .geometry import StripGeometry, polyline_segments, segment_crossing, translate, x_range

logger = logging.getLogger(__name__)

GENERATOR_NAMES = ("a", "b", "c")
NU, ETA, DELTA = 0, 1, 2


def _cut_segments(geom: StripGeometry, d: OneOneDiagram, lo: int, hi: int):
    period = geom.period
    wx, wy = geom.w_point(d.w)
    out = [(ETA, ((lo - 1, wy), (hi + 1, wy)))]
    delta = geom.delta_path(d.z, d.w)
    dlo, dhi = x_range(delta)
    for k in range((lo - wx) // period - 1, (hi - wx) // period + 2):
        x = wx + k * period
        if lo < x < hi:
            out.append((NU, ((x, 0), (x, geom.height))))
    for k in range((lo - dhi) // period - 1, (hi - dlo) // period + 2):
        moved = translate(delta, k * period)
        for seg in polyline_segments(moved):
            out.append((DELTA, seg))
    return out


def step_word(d: OneOneDiagram, geom: StripGeometry, step: Step) -> FreeWord:
    """Cut-system word of one traversal step, in walking order."""
    poly = geom.step_polyline(d, step)
    lo, hi = x_range(poly)
    cuts = _cut_segments(geom, d, lo, hi)
    hits: List[Tuple[int, Fraction, int, int]] = []
    for i, seg in enumerate(polyline_segments(poly)):
        for gen, cut in cuts:
            hit = segment_crossing(seg, cut)
            if hit is not None:
                t, sign = hit
                hits.append((i, t, gen, sign))
    hits.sort()
    return FreeWord(tuple((gen, sign) for _, _, gen, sign in hits))


def beta_words(d: OneOneDiagram) -> List[FreeWord]:
    """One word per traversal step; their product is the beta relator."""
    geom = StripGeometry(d.p)
    return [step_word(d, geom, step) for step in traverse(d).steps]


def read_presentation(d: OneOneDiagram) -> GroupPresentation:
    """
    <a, b, c | a, beta> with meridian c

    The diagram is assumed valid.
    """
    beta = FreeWord()
    for word in beta_words(d):
        beta = beta * word
    logger.debug("heegaard.presentation p=%d beta_length=%d", d.p, len(beta))
    return GroupPresentation(
        3,
        (FreeWord.generator(NU), beta),
        FreeWord.generator(DELTA),
        GENERATOR_NAMES,
    )


def knot_complement_homology(d: OneOneDiagram) -> Tuple[FinAbGroup, GroupElem]:
    """
    H_1 of the knot complement and the meridian class

    Examples:
        >>> from knotradar.heegaard.diagram import parse_diagram
        >>> d = parse_diagram("p: 1\\narc: -0 +0 w=0\\nz: gap 0 -\\nw: gap 0 +\\n")
        >>> H, m = knot_complement_homology(d)
        >>> H, abs(m.free[0])
        (FinAbGroup(rank=1, torsion=()), 1)
    """
    group, ab = abelianize(read_presentation(d))
    return group, ab[DELTA]


def intersection_classes(d: OneOneDiagram) -> Tuple[FinAbGroup, GroupElem, List[GroupElem]]:
    """
    Class of every intersection point, indexed by position

    The class of x is the class of the beta path from point 0 to x; closed
    up along alpha it changes by a multiple of a, which is zero. Differences
    of these classes are the relative gradings.
    """
    words = beta_words(d)
    beta = traverse(d)
    pres = read_presentation(d)
    group, ab = abelianize(pres)
    classes: List[GroupElem] = [group.identity()] * d.p
    current = group.identity()
    for step, word in zip(beta.steps[:-1], words):
        current = current + word_class(word, ab, group)
        classes[step.point] = current
    return group, ab[DELTA], classes
