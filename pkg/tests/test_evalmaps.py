"""Evaluation homomorphisms and Bernstein elements."""

import pytest

from zzeval.evalmaps import (
    EvaluationMap, ev, ev_prime, t0_closed_formula, b0_closed_formula,
    bernstein_y,
)
from zzeval.hecke import HeckeElement
from zzeval.scalars import LaurentPoly

Q = LaurentPoly.q()
PARAMS = [LaurentPoly.one(), Q, -Q, Q ** 2]


def images_satisfy_relations(d, E):
    """The generator images must satisfy every defining relation."""
    one = HeckeElement.one(d)
    T = [E.t0_image()] + [HeckeElement.T(d, i) for i in range(1, d)]
    rho, rho_inv = E.rho_image, E.rho_image_inv
    for i in range(d):
        assert (T[i] * T[i] - one - T[i].scale(Q ** (-1) - Q)).is_zero()
        j = (i + 1) % d
        assert T[i] * T[j] * T[i] == T[j] * T[i] * T[j]
        assert rho * T[i] * rho_inv == T[j]
        for k in range(d):
            if (i - k) % d not in (0, 1, d - 1):
                assert T[i] * T[k] == T[k] * T[i]
    assert rho * rho_inv == one


@pytest.mark.parametrize("d", [3, 4])
@pytest.mark.parametrize("a", PARAMS)
@pytest.mark.parametrize("prime", [False, True])
def test_images_satisfy_relations(d, a, prime):
    images_satisfy_relations(d, EvaluationMap(d, a, prime))


@pytest.mark.parametrize("d", [3, 4])
@pytest.mark.parametrize("a", PARAMS)
def test_is_algebra_homomorphism(d, a):
    E = ev(d, a)
    xs = [HeckeElement.T(d, 0), HeckeElement.rho_elt(d), HeckeElement.b(d, 1)]
    for x in xs:
        for y in xs:
            assert E(x * y) == E(x) * E(y)
            assert E(x + y) == E(x) + E(y)


@pytest.mark.parametrize("d", [3, 4])
@pytest.mark.parametrize("a", PARAMS)
def test_bernstein_normalization(d, a):
    E = ev(d, a)
    assert E(bernstein_y(d, 1)) == HeckeElement.one(d).scale(a)
    Ep = ev_prime(d, a)
    assert Ep(bernstein_y(d, 1, star=True)) == HeckeElement.one(d).scale(a)


@pytest.mark.parametrize("d", [3, 4])
def test_restriction_is_parameter_independent(d):
    """On the non-extended subalgebra the maps do not depend on a."""
    base = ev(d, PARAMS[0])
    t0 = HeckeElement.T(d, 0)
    b0 = HeckeElement.b(d, 0)
    for a in PARAMS[1:]:
        E = ev(d, a)
        assert E(t0) == base(t0)
        assert E(b0) == base(b0)
    baseP = ev_prime(d, PARAMS[0])
    for a in PARAMS[1:]:
        Ep = ev_prime(d, a)
        assert Ep(t0) == baseP(t0)
        assert Ep(b0) == baseP(b0)


@pytest.mark.parametrize("d", [3, 4])
@pytest.mark.parametrize("a", PARAMS)
def test_bar_exchanges_the_two_maps(d, a):
    """bar(ev_a(x)) = ev'_{bar(a)}(bar(x)) on T_0, rho, and b_0."""
    E = ev(d, a)
    Ep = ev_prime(d, a.bar())
    for x in [HeckeElement.T(d, 0), HeckeElement.rho_elt(d), HeckeElement.b(d, 0)]:
        assert E(x).bar() == Ep(x.bar())


@pytest.mark.parametrize("d", [3, 4, 5])
@pytest.mark.parametrize("prime", [False, True])
def test_t0_closed_formula(d, prime):
    E = EvaluationMap(d, LaurentPoly.one(), prime)
    assert E.t0_image() == t0_closed_formula(d, prime)


@pytest.mark.parametrize("d", [3, 4])
@pytest.mark.parametrize("prime", [False, True])
def test_b0_closed_formula(d, prime):
    E = EvaluationMap(d, LaurentPoly.one(), prime)
    b0 = HeckeElement.b(d, 0)
    assert E(b0) == b0_closed_formula(d, prime)


@pytest.mark.parametrize("d", [3, 4])
def test_bernstein_recursion(d):
    """T_i^-1 y_i T_i^-1 = y_{i+1} and T_i y_i^* T_i = y_{i+1}^*."""
    for i in range(1, d - 1):
        lhs = HeckeElement.T_inv(d, i) * bernstein_y(d, i) * HeckeElement.T_inv(d, i)
        assert lhs == bernstein_y(d, i + 1)
        lhs = HeckeElement.T(d, i) * bernstein_y(d, i, star=True) * HeckeElement.T(d, i)
        assert lhs == bernstein_y(d, i + 1, star=True)
