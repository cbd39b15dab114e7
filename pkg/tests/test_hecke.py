"""Extended affine Hecke algebra in the regular basis."""

import pytest

from zzeval.hecke import HeckeElement
from zzeval.scalars import LaurentPoly

Q = LaurentPoly.q()
TWO = LaurentPoly.quantum_int(2)


def defining_relation_defects(d):
    """All defining relations of the extended affine Hecke algebra, as
    elements that must be zero (affine indices mod d, rotation rho)."""
    one = HeckeElement.one(d)
    T = [HeckeElement.T(d, i) for i in range(d)]
    rho = HeckeElement.rho_elt(d)
    rho_inv = HeckeElement.rho_elt(d, -1)
    defects = []
    for i in range(d):
        # quadratic: T_i^2 = 1 + (q^-1 - q) T_i
        defects.append(T[i] * T[i] - one - T[i].scale(Q ** (-1) - Q))
        j = (i + 1) % d
        defects.append(T[i] * T[j] * T[i] - T[j] * T[i] * T[j])
        defects.append(rho * T[i] * rho_inv - T[j])
        for k in range(d):
            if (i - k) % d not in (0, 1, d - 1):
                defects.append(T[i] * T[k] - T[k] * T[i])
    defects.append(rho * rho_inv - one)
    return defects


@pytest.mark.parametrize("d", [3, 4, 5])
def test_defining_relations(d):
    for defect in defining_relation_defects(d):
        assert defect.is_zero()


@pytest.mark.parametrize("d", [3, 4, 5])
def test_kl_generators(d):
    one = HeckeElement.one(d)
    for i in range(d):
        b = HeckeElement.b(d, i)
        assert b == HeckeElement.T(d, i) + one.scale(Q)
        assert b * b == b.scale(TWO)
        j = (i + 1) % d
        bj = HeckeElement.b(d, j)
        assert b * bj * b - b == bj * b * bj - bj


@pytest.mark.parametrize("d", [3, 4])
def test_t_inverse(d):
    one = HeckeElement.one(d)
    for i in range(d):
        assert HeckeElement.T(d, i) * HeckeElement.T_inv(d, i) == one
        assert HeckeElement.T_inv(d, i) * HeckeElement.T(d, i) == one


@pytest.mark.parametrize("d", [3, 4])
def test_bar_involution(d):
    for x in [HeckeElement.T(d, 1), HeckeElement.rho_elt(d),
              HeckeElement.b(d, 0), HeckeElement.T(d, 1) * HeckeElement.T(d, 2)]:
        assert x.bar().bar() == x
    # bar is an algebra map: bar(xy) = bar(x) bar(y)
    x = HeckeElement.T(d, 1) + HeckeElement.one(d).scale(Q)
    y = HeckeElement.rho_elt(d) * HeckeElement.T(d, 0)
    assert (x * y).bar() == x.bar() * y.bar()
    # bar fixes rho and the KL generators
    assert HeckeElement.rho_elt(d).bar() == HeckeElement.rho_elt(d)
    for i in range(d):
        assert HeckeElement.b(d, i).bar() == HeckeElement.b(d, i)


def test_rho_power_regular_basis():
    d = 3
    x = HeckeElement.rho_elt(d, 2) * HeckeElement.T(d, 1)
    assert len(x.terms) == 1
    ((g, c),) = x.terms.items()
    assert g.reduced_word() == (2, (1,))
    assert c.is_one()


def test_basis_coefficients_are_exact():
    d = 3
    x = HeckeElement.T(d, 1) ** 4
    # T^4 expands with bounded Laurent exponents, never floats
    for c in x.terms.values():
        assert isinstance(c, LaurentPoly)
