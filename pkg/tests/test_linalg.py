"""Exact linear algebra over the rationals and rational-function fields."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from zzeval import linalg

Z, ONE = Fraction(0), Fraction(1)


def matrices(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.integers(1, max_n).flatmap(
            lambda m: st.lists(
                st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=4),
                         min_size=m, max_size=m),
                min_size=n, max_size=n,
            )
        )
    )


@settings(max_examples=60)
@given(matrices())
def test_rank_plus_nullity(mat):
    rows, cols = len(mat), len(mat[0])
    rank = linalg.rank([row[:] for row in mat])
    null = linalg.nullspace([row[:] for row in mat], Z, ONE)
    assert rank + len(null) == cols
    for vec in null:
        out = linalg.mat_vec(mat, vec, Z)
        assert all(x == 0 for x in out)


@settings(max_examples=60)
@given(matrices(), st.data())
def test_solve_recovers_known_solution(mat, data):
    cols = len(mat[0])
    x = data.draw(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=4),
                           min_size=cols, max_size=cols))
    v = linalg.mat_vec(mat, x, Z)
    sol = linalg.solve([row[:] for row in mat], v[:], Z)
    assert sol is not None
    assert linalg.mat_vec(mat, sol, Z) == v


@settings(max_examples=60)
@given(matrices(3))
def test_invert_square_matrices(mat):
    n = len(mat)
    if len(mat[0]) != n:
        mat = [row[:n] + [Z] * (n - len(row[:n])) for row in mat[:n]]
        while len(mat) < n:
            mat.append([Z] * n)
    if linalg.rank([row[:] for row in mat]) < n:
        return
    inv = linalg.invert([row[:] for row in mat], Z, ONE)
    prod = linalg.mat_mul(mat, inv, Z)
    ident = linalg.identity(n, Z, ONE)
    assert linalg.mat_eq(prod, ident)
    assert linalg.mat_eq(linalg.mat_mul(inv, mat, Z), ident)


def test_solve_reports_inconsistency():
    mat = [[ONE, ONE], [ONE, ONE]]
    assert linalg.solve([r[:] for r in mat], [ONE, Fraction(2)], Z) is None
