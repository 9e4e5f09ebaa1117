"""Small exact linear algebra over the rationals.

Matrices are lists of rows; entries are ints or Fractions.  Everything here
is sized for rank <= 8 root data and matrices of a few hundred rows, so plain
Gauss-Jordan elimination is all we need.
"""

from fractions import Fraction


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def inverse(m):
    """Exact inverse by Gauss-Jordan elimination.

    Raises ValueError for a singular or non-square matrix.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    a = [[Fraction(x) for x in row] for row in m]
    inv = identity(n)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            inv[col], inv[pivot] = inv[pivot], inv[col]
        p = a[col][col]
        if p != 1:
            a[col] = [x / p for x in a[col]]
            inv[col] = [x / p for x in inv[col]]
        for r in range(n):
            f = a[r][col]
            if r != col and f != 0:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def det(m):
    """Exact determinant (Fraction for rational input, exact int value otherwise)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in m]
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f != 0:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return result


def unit_lower_inverse(m):
    """Inverse of a unit lower-triangular integer matrix, by forward substitution.

    Stays in integer arithmetic; raises ValueError if ``m`` is not unit
    lower triangular.
    """
    n = len(m)
    for i in range(n):
        if m[i][i] != 1 or any(m[i][j] != 0 for j in range(i + 1, n)):
            raise ValueError("matrix is not unit lower triangular")
    inv = [[int(i == j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            inv[i][j] = -sum(m[i][k] * inv[k][j] for k in range(j, i))
    return inv
