"""Cell modules, Gram forms, and simple quotients."""

import pytest

from zzeval import linalg
from zzeval.cellmods import (
    CellModule, EvaluationModule, SimpleQuotient, iso_to_simple_quotient,
    minus_q_power, radical_suite,
)
from zzeval.hecke import HeckeElement
from zzeval.scalars import LaurentPoly

Q = LaurentPoly.q()
ZERO = LaurentPoly.zero()
TWO = LaurentPoly.quantum_int(2)


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_gram_rank_drop_exactly_at_critical_z(d):
    for sign in (1, -1):
        mod = CellModule(d, minus_q_power(sign * d), 1)
        assert mod.gram_rank() == d - 1
        assert len(mod.radical_basis()) == 1
    for z in (Q, Q ** 2, LaurentPoly.one()):
        mod = CellModule(d, z, 1)
        assert mod.gram_rank() == d
        assert mod.radical_basis() == []


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_singular_vectors(d):
    for sign in (1, -1):
        mod = CellModule(d, minus_q_power(sign * d), 1)
        n = mod.singular_vector(sign)
        for i in range(d):
            out = linalg.mat_vec(mod._gen_matrix(i), n, ZERO)
            assert all(c.is_zero() for c in out)
        got = linalg.mat_vec(mod._rho_matrix(1), n, ZERO)
        eig = minus_q_power(sign)
        assert all((got[i] - eig * n[i]).is_zero() for i in range(d))


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_generator_matrices_satisfy_algebra_relations(d):
    mod = CellModule(d, minus_q_power(d), Q)
    mats = [mod._gen_matrix(i) for i in range(d)]
    mul = lambda a, b: linalg.mat_mul(a, b, ZERO)
    for i in range(d):
        bi = mats[i]
        assert linalg.mat_eq(mul(bi, bi), linalg.mat_scale(bi, TWO))
        j = (i + 1) % d
        bj = mats[j]
        lhs = linalg.mat_add(mul(mul(bi, bj), bi), linalg.mat_scale(bi, -1))
        rhs = linalg.mat_add(mul(mul(bj, bi), bj), linalg.mat_scale(bj, -1))
        assert linalg.mat_eq(lhs, rhs)
        if (i - j) % d not in (0, 1, d - 1):
            assert linalg.mat_eq(mul(bi, bj), mul(bj, bi))
    rho = mod._rho_matrix(1)
    rho_inv = mod._rho_matrix(-1)
    for i in range(d):
        lhs = mul(mul(rho, mats[i]), rho_inv)
        assert linalg.mat_eq(lhs, mats[(i + 1) % d])


@pytest.mark.parametrize("d", [3, 4, 5, 6])
@pytest.mark.parametrize("lam", [LaurentPoly.one(), Q])
@pytest.mark.parametrize("sign", [1, -1])
def test_simple_quotient_matches_evaluation_module(d, lam, sign):
    quot, emod = iso_to_simple_quotient(d, lam, sign)
    assert quot.dim == d - 1
    assert emod.dim == d - 1


@pytest.mark.parametrize("d", [3, 4])
def test_act_hecke_respects_products(d):
    mod = CellModule(d, minus_q_power(d), 1)
    x = HeckeElement.rho_elt(d) * HeckeElement.b(d, 0)
    y = HeckeElement.T(d, 1)
    ax = mod.act_hecke(x)
    ay = mod.act_hecke(y)
    # action matrices compose contravariantly on coordinates: (xy)m = x(y m)
    prod = mod.act_hecke(x * y)
    assert linalg.mat_eq(prod, linalg.mat_mul(ax, ay, ZERO))


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_radical_suite_all_pass(d):
    for rep in radical_suite(d):
        assert rep["pass"], rep["id"]
