# coding=utf-8
"""
Diagram families generated from parameters
"""

from math import gcd

from knotradar.utils.errors import InvalidParameterError

from .diagram import Arc, Endpoint, Mark, OneOneDiagram


def simple_knot(p: int, q: int, k: int) -> OneOneDiagram:
    """
    The simple knot K(p, q, k) in the lens space L(p, q)

    beta is the straight curve meeting alpha p times, each arc running from
    (-, i) to (+, i + q). The regions are the p parallelograms between
    consecutive arcs; z sits in the one over gap 0 and w in the one over
    gap k. For k = 0 both lie in the same region and the knot is trivial.

    Raises:
        InvalidParameterError: p < 1 or gcd(p, q) != 1

    Examples:
        >>> d = simple_knot(5, 2, 1)
        >>> d.arcs[4]
        Arc(start=Endpoint(side='-', position=4), end=Endpoint(side='+', position=1), winding=1)
    """
    if p < 1:
        raise InvalidParameterError(f"p must be positive, got {p}")
    if gcd(p, q) != 1:
        raise InvalidParameterError(f"gcd({p}, {q}) != 1", suggestion="L(p, q) needs coprime p and q")
    arcs = tuple(
        Arc(Endpoint("-", i), Endpoint("+", (i + q) % p), (i + q) // p)
        for i in range(p)
    )
    z = Mark(0, "-")
    if k % p:
        w = Mark(k % p, "-")
    else:
        w = Mark(q % p, "+")
    return OneOneDiagram(p, arcs, z, w)
