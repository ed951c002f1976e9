# coding=utf-8
"""
Smith normal form over the integers

Matrices are plain lists of integer rows at the package boundary; the
reductions themselves are sympy's. smith_normal_form returns the invariant
factors together with unimodular transforms L, R such that L * mat * R is
diagonal with each entry dividing the next.
"""

from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp
from sympy.polys.matrices import DomainMatrix

IntMatrix = List[List[int]]


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [
        [sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for row in a
    ]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> List[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def _to_ints(m: Matrix) -> IntMatrix:
    return [[int(v) for v in row] for row in m.tolist()]


def integer_det(mat: Sequence[Sequence[int]]) -> int:
    """
    Determinant of a square integer matrix

    Examples:
        >>> integer_det([[2, 1], [7, 4]])
        1
        >>> integer_det([])
        1
    """
    n = len(mat)
    if n == 0:
        return 1
    rows = [[ZZ(int(v)) for v in row] for row in mat]
    return int(DomainMatrix(rows, (n, n), ZZ).det())


def _normalize(diag: List[int], left: IntMatrix, right: IntMatrix) -> None:
    """Make diag non-negative, zeros last and a divisor chain, updating left and right in place."""
    k = len(diag)
    for i in range(k):
        if diag[i] < 0:
            diag[i] = -diag[i]
            left[i] = [-v for v in left[i]]

    order = sorted(range(k), key=lambda i: diag[i] == 0)
    if order != list(range(k)):
        diag[:] = [diag[i] for i in order]
        left[:k] = [left[i] for i in order]
        for row in right:
            row[:k] = [row[i] for i in order]

    nonzero = sum(1 for d in diag if d)
    for i in range(nonzero):
        for j in range(i + 1, nonzero):
            a, b = diag[i], diag[j]
            if b % a == 0:
                continue
            # [[x, y], [-b/g, a/g]] diag(a, b) [[1, -y*b/g], [1, x*a/g]] = diag(g, a*b/g)
            x, y, g = (int(v) for v in ZZ.gcdex(ZZ(a), ZZ(b)))
            li, lj = left[i], left[j]
            left[i] = [x * p + y * q for p, q in zip(li, lj)]
            left[j] = [-(b // g) * p + (a // g) * q for p, q in zip(li, lj)]
            for row in right:
                ci, cj = row[i], row[j]
                row[i] = ci + cj
                row[j] = -y * (b // g) * ci + x * (a // g) * cj
            diag[i], diag[j] = g, a * b // g


def smith_normal_form(mat: Sequence[Sequence[int]]) -> Tuple[List[int], IntMatrix, IntMatrix]:
    """
    Reduce an integer matrix to Smith normal form

    Args:
        mat: m x n integer matrix (m or n may be zero)

    Returns:
        (diag, left, right) with left * mat * right diagonal, diag of length
        min(m, n), non-negative, each entry dividing the next; zeros last.

    Examples:
        >>> smith_normal_form([[2, 0], [0, 3]])[0]
        [1, 6]
        >>> smith_normal_form([[0]])[0]
        [0]
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    if m == 0 or n == 0:
        return [], identity_matrix(m), identity_matrix(n)

    _smf, s, t = smith_normal_decomp(Matrix([list(row) for row in mat]), domain=ZZ)
    left, right = _to_ints(s), _to_ints(t)
    product = matmul(matmul(left, mat), right)
    diag = [product[i][i] for i in range(min(m, n))]
    _normalize(diag, left, right)
    return diag, left, right


def unimodular_inverse(mat: Sequence[Sequence[int]]) -> IntMatrix:
    """Inverse of a square integer matrix with determinant +-1."""
    det = integer_det(mat)
    if abs(det) != 1:
        raise ValueError("matrix is not unimodular")
    if not mat:
        return []
    return _to_ints(Matrix([list(row) for row in mat]).adjugate() * det)


def solve_integer_system(mat: Sequence[Sequence[int]], rhs: Sequence[int]) -> Optional[List[int]]:
    """
    Find an integer vector z with mat * z = rhs, or None when none exists

    Examples:
        >>> solve_integer_system([[2, 0], [0, 3]], [4, 9])
        [2, 3]
        >>> solve_integer_system([[2]], [3]) is None
        True
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    if m == 0:
        return [0] * n
    diag, left, right = smith_normal_form(mat)
    target = matvec(left, rhs)
    y = [0] * n
    for i in range(m):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if target[i] != 0:
                return None
            continue
        if target[i] % d:
            return None
        y[i] = target[i] // d
    return matvec(right, y)
