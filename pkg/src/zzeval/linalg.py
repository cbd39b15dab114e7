"""Generic exact dense linear algebra over an exact field.

Matrices are lists of lists of scalars.  Scalars must support +, -, *, /
and either an ``is_zero()`` method or comparison with the integer 0
(``fractions.Fraction`` and ``RationalFunction`` both qualify).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence


def _is_zero(x) -> bool:
    z = getattr(x, "is_zero", None)
    return z() if z is not None else x == 0


def rref(matrix: list[list], inplace: bool = False):
    """Reduced row echelon form.  Returns (rref_matrix, pivot_columns)."""
    m = matrix if inplace else [list(row) for row in matrix]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if not _is_zero(m[i][c])), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv_entry = m[r][c]
        m[r] = [x / inv_entry for x in m[r]]
        for i in range(rows):
            if i != r and not _is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(matrix: list[list]) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: list[list], zero, one) -> list[list]:
    """Basis of the right nullspace {v : matrix @ v = 0}."""
    if not matrix:
        return []
    cols = len(matrix[0])
    red, pivots = rref(matrix)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(matrix: list[list], rhs: list, zero):
    """One solution of matrix @ x = rhs, or None if inconsistent."""
    if not matrix:
        return [] if all(_is_zero(b) for b in rhs) else None
    cols = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def mat_mul(a: list[list], b: list[list], zero) -> list[list]:
    if not a or not b:
        return [[] for _ in a]
    return [
        [
            sum((ra[k] * b[k][j] for k in range(len(b)) if not _is_zero(ra[k])), zero)
            for j in range(len(b[0]))
        ]
        for ra in a
    ]


def mat_vec(a: list[list], v: list, zero) -> list:
    return [
        sum((row[k] * v[k] for k in range(len(v)) if not _is_zero(row[k])), zero)
        for row in a
    ]


def identity(n: int, zero, one) -> list[list]:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_add(a: list[list], b: list[list]) -> list[list]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: list[list], c) -> list[list]:
    return [[c * x for x in row] for row in a]


def mat_eq(a: list[list], b: list[list]) -> bool:
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        if any(not _is_zero(x - y) for x, y in zip(ra, rb)):
            return False
    return True


def is_zero_matrix(a: list[list]) -> bool:
    return all(_is_zero(x) for row in a for x in row)


def invert(matrix: list[list], zero, one):
    """Inverse of a square matrix, or None if singular."""
    n = len(matrix)
    if n == 0:
        return []
    aug = [list(row) + list(identity(n, zero, one)[i]) for i, row in enumerate(matrix)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red[:n]]


def row_space_contains(rows: list[list], vec: list, zero) -> bool:
    """Whether vec lies in the span of the given rows."""
    if all(_is_zero(x) for x in vec):
        return True
    if not rows:
        return False
    cols = [[rows[r][c] for r in range(len(rows))] for c in range(len(rows[0]))]
    return solve(cols, vec, zero) is not None


FRACTION_ZERO = Fraction(0)
FRACTION_ONE = Fraction(1)
