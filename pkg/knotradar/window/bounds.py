# coding=utf-8
"""
Grading bounds of stabilized surfaces and the isomorphism window

A tangle component of order q is stabilized into surfaces S_j, indexed by
the two signs and by n >= 0. With chi_j the Euler characteristic of the
capped surface,

    chi_-  = chi_+ - q + tau(-)
    chi_n  = chi_+ - n*q + tau(n)

the nonzero gradings lie between i_min = chi_j / 2 - tau(j) and
i_max = -chi_j / 2. The window constants P_n, rho_n and Q_n locate the
range of gradings on which the stabilized and unstabilized groups agree.

Everything here is exact integer bookkeeping; nothing is said about which
gradings actually carry homology.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple, Union

from knotradar.utils.errors import InvalidParameterError, NegativeBlockError, ParityError
from knotradar.utils.validators import validate_non_negative_int, validate_positive_int

logger = logging.getLogger(__name__)

Index = Union[int, str]
PLUS = "+"
MINUS = "-"


def _check_index(j: Index) -> None:
    if j in (PLUS, MINUS):
        return
    validate_non_negative_int(j, "surface index")


@dataclass(frozen=True)
class WindowParams:
    """
    q: order of the tangle component
    chi_bar_plus: Euler characteristic of the capped surface S_+
    tau: correction per surface index, each 0 or -1; missing indices are 0
    n: stabilization count
    """

    q: int
    chi_bar_plus: int
    tau: Mapping[Index, int] = field(default_factory=dict)
    n: int = 0

    def __post_init__(self):
        validate_positive_int(self.q, "q")
        if self.chi_bar_plus > 0:
            raise InvalidParameterError(
                f"chi_bar_plus must be <= 0, got {self.chi_bar_plus}",
                suggestion="capped surfaces here have non-positive Euler characteristic",
            )
        validate_non_negative_int(self.n, "n")
        for j, v in self.tau.items():
            _check_index(j)
            if v not in (0, -1):
                raise InvalidParameterError(f"tau({j}) must be 0 or -1, got {v}")

    def tau_of(self, j: Index) -> int:
        return self.tau.get(j, 0)

    def chi_bar(self, j: Index) -> int:
        """
        Examples:
            >>> p = WindowParams(5, -2, {1: -1})
            >>> p.chi_bar("+"), p.chi_bar("-"), p.chi_bar(1)
            (-2, -7, -8)
        """
        _check_index(j)
        if j == PLUS:
            return self.chi_bar_plus
        if j == MINUS:
            return self.chi_bar_plus - self.q + self.tau_of(MINUS)
        return self.chi_bar_plus - j * self.q + self.tau_of(j)

    def with_n(self, n: int) -> "WindowParams":
        return WindowParams(self.q, self.chi_bar_plus, self.tau, n)


def _exact_bounds(params: WindowParams, j: Index) -> Tuple[Fraction, Fraction]:
    chi = Fraction(params.chi_bar(j))
    return -chi / 2, chi / 2 - params.tau_of(j)


def bounds(params: WindowParams, j: Index) -> Tuple[int, int]:
    """
    (i_max, i_min) for the surface S_j

    Raises:
        ParityError: chi_j is odd, so the bounds are not integers

    Examples:
        >>> bounds(WindowParams(5, -2, {1: -1}), 1)
        (4, -3)
        >>> bounds(WindowParams(5, -2), "+")
        (1, -1)
    """
    chi = params.chi_bar(j)
    if chi % 2:
        raise ParityError(f"chi(S_{j}) = {chi} is odd")
    i_max, i_min = _exact_bounds(params, j)
    return int(i_max), int(i_min)


@dataclass(frozen=True)
class WindowReport:
    params: WindowParams
    bounds: Dict[Index, Optional[Tuple[int, int]]]
    P_n: int
    rho_n: int
    Q_n: int

    @property
    def valid(self) -> bool:
        return self.Q_n - self.rho_n > self.params.q


def _exact_constants(params: WindowParams, n: int) -> Tuple[Fraction, Fraction, Fraction]:
    i_max, i_min = _exact_bounds(params, n)
    q, tau_plus = params.q, params.tau_of(PLUS)
    P = i_min + (n + 1) * q - tau_plus
    rho = i_max - n * q
    Q = P - q + tau_plus
    return P, rho, Q


def window_constants(params: WindowParams) -> WindowReport:
    """
    P_n, rho_n, Q_n at n = params.n

    Bounds are reported for '+', '-' and n; the '-' entry is None when
    chi_- is odd since none of the constants depend on it.

    Raises:
        ParityError: chi_+ or chi_n is odd
    """
    n = params.n
    table: Dict[Index, Optional[Tuple[int, int]]] = {
        PLUS: bounds(params, PLUS),
        MINUS: None,
        n: bounds(params, n),
    }
    if params.chi_bar(MINUS) % 2 == 0:
        table[MINUS] = bounds(params, MINUS)
    P, rho, Q = _exact_constants(params, n)
    report = WindowReport(params, table, int(P), int(rho), int(Q))
    logger.debug("window.constants q=%d chi=%d n=%d valid=%s", params.q, params.chi_bar_plus, n, report.valid)
    return report


@dataclass(frozen=True)
class BlockSums:
    first: Tuple[int, ...]
    second: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.first)


def block_sums(params: WindowParams, n: Optional[int] = None) -> BlockSums:
    """
    The two five-block splittings of the window at n + 1

    Raises:
        NegativeBlockError: the middle block chi_+ + (n - 1)q - 1 is negative

    Examples:
        >>> b = block_sums(WindowParams(5, -2), 2)
        >>> b.first, b.second, b.total
        ((5, 3, 2, 5, 3), (3, 5, 2, 3, 5), 18)
    """
    n = params.n if n is None else n
    q, chi = params.q, params.chi_bar_plus
    middle = chi + (n - 1) * q - 1
    if middle < 0:
        raise NegativeBlockError(f"middle block {middle} < 0 at n = {n}", suggestion=f"use n >= {_first_nonnegative(q, chi)}")
    side = -chi + 1
    return BlockSums((q, side, middle, q, side), (side, q, middle, side, q))


def _first_nonnegative(q: int, chi: int) -> int:
    # smallest n with chi + (n - 1) q - 1 >= 0
    return 1 + -(-(1 - chi) // q)


def identity_suite(params: WindowParams) -> List[Tuple[str, bool]]:
    """
    Exact checks of the window identities at params.n

    Evaluated over the rationals, so odd Euler characteristics do not block
    them. The block identities are included once n is large enough for the
    splittings to exist.
    """
    n, q, chi = params.n, params.q, params.chi_bar_plus
    tau_plus = params.tau_of(PLUS)
    i_max, i_min = _exact_bounds(params, n)
    i_max1, i_min1 = _exact_bounds(params, n + 1)
    P, rho, Q = _exact_constants(params, n)
    P1, _, _ = _exact_constants(params, n + 1)
    results = [
        ("top-gap", i_max - Q == -chi),
        ("bottom-gap", rho - i_min == -chi),
        ("width", P - rho == chi - tau_plus + (n + 1) * q),
        ("q-gap", Q - rho == chi + n * q),
        ("shift-min", P1 - P == i_min1 - i_min + q),
        ("shift-max", i_min1 - i_min + q == i_max1 - i_max),
    ]
    try:
        blocks = block_sums(params, n)
    except NegativeBlockError:
        return results
    expected = (n + 1) * q - chi + 1
    results.append(("split-totals", sum(blocks.first) == sum(blocks.second) == expected))
    results.append(("split-window", blocks.total == i_max1 - i_min1 + 1))
    return results


def scan(q: int, chi_bar_plus: int, tau: Optional[Mapping[Index, int]] = None, n_max: int = 64) -> Optional[int]:
    """
    First n <= n_max at which the window is valid, or None

    Examples:
        >>> scan(5, -2, n_max=10)
        2
        >>> scan(1, 0, n_max=1) is None
        True
    """
    params = WindowParams(q, chi_bar_plus, dict(tau or {}))
    for n in range(n_max + 1):
        _, rho, Q = _exact_constants(params, n)
        if Q - rho > q:
            return n
    return None
