# coding=utf-8
"""
Division-free determinants over Z[H]

Z[H] has zero divisors as soon as H has torsion, so elimination methods
that divide are unavailable. Two methods are provided: Bird's algorithm
(default, O(n^4) ring operations) and cached Laplace expansion.
"""

from functools import lru_cache
from typing import List, Sequence, Tuple

from knotradar.abelian import FinAbGroup
from knotradar.ring import GroupRingElem
from knotradar.utils.errors import InvalidParameterError

Matrix = Sequence[Sequence[GroupRingElem]]

DET_METHODS = ("bird", "laplace")


def _check_square(mat: Matrix) -> int:
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise ValueError("determinant of a non-square matrix")
    return n


def _det_bird(mat: Matrix, group: FinAbGroup) -> GroupRingElem:
    n = len(mat)
    zero = GroupRingElem.zero(group)

    def mu(x: List[List[GroupRingElem]]) -> List[List[GroupRingElem]]:
        # strictly lower part cleared, diagonal replaced by minus trailing sums
        total = zero
        diag_sums = [zero]
        for i in reversed(range(1, n)):
            total = total - x[i][i]
            diag_sums.append(total)
        diag_sums = diag_sums[::-1]
        return [[zero] * i + [diag_sums[i]] + list(x[i][i + 1:]) for i in range(n)]

    def matmul(a, b):
        return [
            [_dot([a[i][k] for k in range(n)], [b[k][j] for k in range(n)], zero) for j in range(n)]
            for i in range(n)
        ]

    base = [list(row) for row in mat]
    f = base
    for _ in range(n - 1):
        f = matmul(mu(f), base)
    det = f[0][0]
    return -det if n % 2 == 0 else det


def _dot(a, b, zero: GroupRingElem) -> GroupRingElem:
    out = zero
    for x, y in zip(a, b):
        if x.is_zero or y.is_zero:
            continue
        out = out + x * y
    return out


def _det_laplace(mat: Matrix, group: FinAbGroup) -> GroupRingElem:
    rows = tuple(tuple(row) for row in mat)
    n = len(rows)
    zero = GroupRingElem.zero(group)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: Tuple[int, ...]) -> GroupRingElem:
        if row == n:
            return GroupRingElem.one(group)
        out = zero
        for pos, c in enumerate(cols):
            entry = rows[row][c]
            if entry.is_zero:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            out = out - term if pos % 2 else out + term
        return out

    return minor(0, tuple(range(n)))


def determinant(mat: Matrix, group: FinAbGroup, method: str = "bird") -> GroupRingElem:
    """
    Determinant of a square matrix over Z[group]; the empty matrix has determinant 1

    Raises:
        InvalidParameterError: unknown method
    """
    n = _check_square(mat)
    if method not in DET_METHODS:
        raise InvalidParameterError(
            f"unknown determinant method: {method}",
            suggestion=f"supported: {', '.join(DET_METHODS)}"
        )
    if n == 0:
        return GroupRingElem.one(group)
    if n == 1:
        return mat[0][0]
    if method == "laplace":
        return _det_laplace(mat, group)
    return _det_bird(mat, group)
