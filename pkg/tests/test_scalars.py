"""Exact Laurent-polynomial and rational-function arithmetic."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from zzeval.scalars import LaurentPoly, RationalFunction


def lpoly(max_terms=4, max_exp=5, max_coeff=9):
    return st.dictionaries(
        st.integers(-max_exp, max_exp),
        st.integers(-max_coeff, max_coeff),
        max_size=max_terms,
    ).map(LaurentPoly)


@given(lpoly(), lpoly(), lpoly())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a
    assert (a - a).is_zero()


@given(lpoly(), lpoly())
def test_bar_is_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a + b).bar() == a.bar() + b.bar()
    assert (a * b).bar() == a.bar() * b.bar()


@given(lpoly(), st.integers(0, 4))
def test_power_matches_repeated_product(a, n):
    out = LaurentPoly.one()
    for _ in range(n):
        out = out * a
    assert a ** n == out


@given(st.integers(-6, 6), st.integers(-3, 3).filter(lambda n: n != 0))
def test_negative_powers_of_monomials(e, n):
    m = LaurentPoly.monomial(e, 3)
    assert m ** n * m ** (-n) == LaurentPoly.one()


def test_quantum_integers():
    q = LaurentPoly.q()
    assert LaurentPoly.quantum_int(2) == q + q ** (-1)
    assert LaurentPoly.quantum_int(3) == q ** 2 + LaurentPoly.one() + q ** (-2)
    # [n] is bar-invariant
    for n in range(1, 6):
        assert LaurentPoly.quantum_int(n).bar() == LaurentPoly.quantum_int(n)


@given(lpoly(), st.integers(-4, 4))
def test_shift_is_multiplication_by_monomial(a, k):
    assert a.shift(k) == a * LaurentPoly.monomial(k)


def _rat(num, den):
    return RationalFunction(num, den)


@settings(max_examples=40)
@given(lpoly(3, 3), lpoly(3, 3).filter(lambda p: not p.is_zero()),
       lpoly(3, 3), lpoly(3, 3).filter(lambda p: not p.is_zero()))
def test_rational_function_field_ops(a, b, c, d):
    x, y = _rat(a, b), _rat(c, d)
    assert x + y == y + x
    assert x * y == y * x
    assert (x - x).is_zero()
    if not x.is_zero():
        assert x * x.inverse() == RationalFunction.one()


@settings(max_examples=40)
@given(lpoly(3, 3), lpoly(3, 3).filter(lambda p: not p.is_zero()))
def test_rational_function_normal_form(a, b):
    # a/b + a/b == 2a/b regardless of common factors
    x = _rat(a, b)
    assert x + x == _rat(a + a, b)


def test_laurent_lifts_to_rational():
    q = LaurentPoly.q()
    p = q ** 2 - LaurentPoly.one()
    x = RationalFunction(p)
    assert x.to_laurent() == p
