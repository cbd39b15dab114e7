"""Complexes of graded projectives: minimal models, hom spaces, Rouquier
complexes, and the rotation functor."""

import random
from fractions import Fraction

import pytest

from zzeval.homotopy import (
    Complex, HomSpace, apply_rouquier, check_chainmap, check_homotopy_data,
    check_nullhomotopy, compose_chainmaps, ev_trho, ev_trho_inverse,
    homotopy_equivalence, iso_test, scale_chainmap, sub_chainmaps,
    verify_snake_relations,
)
from zzeval.projcat import ModMorphism
from zzeval.scalars import LaurentPoly
from zzeval.zigzag import affine_zigzag


def braid_complex(d, word, vertex=1, seed=None):
    A = affine_zigzag(d)
    C = Complex.generator(A, vertex)
    for i in word:
        C = apply_rouquier(C, abs(i), 1 if i > 0 else -1)
    return C


WORDS = [(1,), (1, -2), (2, 1, 2), (1, 1, -2)]


@pytest.mark.parametrize("word", WORDS)
def test_differential_squares_to_zero(word):
    C = braid_complex(3, word)
    for n in C.support():
        assert C.diff(n + 1).compose(C.diff(n)).is_zero()


@pytest.mark.parametrize("word", WORDS)
def test_minimize_with_witness(word):
    C = braid_complex(3, word)
    M, pi, iota, h = C.minimize_with_witness(verify=False)
    assert check_homotopy_data(C, M, pi, iota, h)
    # minimality: every differential entry has strictly positive degree
    A = C.algebra
    for n in M.support():
        f = M.diff(n)
        for row in f.entries:
            for x in row:
                assert all(A.degree(A.basis[k]) > 0 for k in x.coeffs)


@pytest.mark.parametrize("word", WORDS)
def test_euler_class_preserved_by_minimization(word):
    C = braid_complex(3, word)
    assert C.decat() == C.minimize().decat()


def test_minimal_model_unique_up_to_iso():
    C = braid_complex(3, (1, -2, 1))
    D = braid_complex(3, (1, -2, 1)).shift(0, 0)
    assert iso_test(C.minimize(), D.minimize()) is not None


def test_shift_conventions():
    C = braid_complex(3, (1,))
    D = C.shift(2, 3)
    assert sorted(D.support()) == sorted(n - 3 for n in C.support())
    for n in C.support():
        assert D.term(n - 3).summands == tuple(
            (v, t + 2) for v, t in C.term(n).summands
        )
    q = LaurentPoly.q()
    decC, decD = C.decat(), D.decat()
    for v in decC:
        assert decD[v] == decC[v] * q ** 2 * LaurentPoly.from_int((-1) ** 3)


def test_hom_space_dimension_of_identity():
    C = braid_complex(3, (1, 2)).minimize()
    H = HomSpace(C, C, 0, 0)
    assert H.dim >= 1
    ident = {n: ModMorphism.identity(C.term(n)) for n in C.support()}
    assert check_chainmap(C, C, ident, 0)
    assert H.express(ident) is not None


def test_homotopy_class_composition_is_well_defined():
    """Composing with a null-homotopic perturbation cannot change the class."""
    C = braid_complex(3, (1, -2))
    D = braid_complex(3, (1, -2))
    H = HomSpace(C, D, 0, 0)
    assert H.dim >= 1
    f = H.chainmap([Fraction(1)] + [Fraction(0)] * (H.dim - 1))
    rng = random.Random(7)
    # build a null-homotopic chain map dh + hd from random h
    h = {}
    for n in C.support():
        src, tgt = C.term(n), D.term(n - 1)
        if src.is_zero() or tgt.is_zero():
            continue
        g = ModMorphism.zero(src, tgt, 0)
        for r in range(len(tgt)):
            for c in range(len(src)):
                iv, jv = src.summands[c][0], tgt.summands[r][0]
                for b in C.algebra.hom_basis(jv, iv):
                    ia, jb = src.summands[c][1], tgt.summands[r][1]
                    if jb - ia == C.algebra.degree(b):
                        g.entries[r][c] = g.entries[r][c] + \
                            C.algebra.element(b, rng.randint(-3, 3))
        h[n] = g
    pert = {}
    for n in C.support():
        total = ModMorphism.zero(C.term(n), D.term(n), 0)
        if n in h:
            total = total + D.diff(n - 1).compose(h[n])
        if n + 1 in h:
            total = total + h[n + 1].compose(C.diff(n))
        if not total.is_zero():
            pert[n] = total
    assert check_chainmap(C, D, pert, 0)
    assert H.is_nullhomotopic(pert)
    g = {}
    for n in set(f) | set(pert):
        a = f.get(n)
        b = pert.get(n)
        g[n] = a + b if a is not None and b is not None else (a or b)
    assert H.express(g) == H.express(f)


def test_homotopy_equivalence_witnesses():
    C = braid_complex(3, (1, -1))
    D = Complex.generator(affine_zigzag(3), 1)
    data = homotopy_equivalence(C, D)
    assert data is not None
    phi, psi, hC, hD = data
    # psi . phi = id_C - (d hC + hC d) and phi . psi = id_D - (d hD + hD d)
    idC = {n: ModMorphism.identity(C.term(n)) for n in C.support()}
    comp = compose_chainmaps(psi, phi, 0)
    defect = sub_chainmaps(idC, comp)
    assert check_nullhomotopy(C, C, defect, hC)


@pytest.mark.parametrize("i", [1, 2])
def test_rouquier_inverse_on_generators(i):
    d = 3
    for j in range(d):
        C = Complex.generator(affine_zigzag(d), j)
        CC = apply_rouquier(apply_rouquier(C, i, 1), i, -1)
        assert iso_test(CC, C) is not None


@pytest.mark.parametrize("i", [1, 2])
def test_snake_relations(i):
    C = Complex.generator(affine_zigzag(3), 1)
    for check_id, ok in verify_snake_relations(C, i):
        assert ok, check_id


def test_rotation_functor_routes_agree():
    d = 3
    for j in range(d):
        C = Complex.generator(affine_zigzag(d), j)
        t = ev_trho(C, d - 2, 2 - d, route="tensor")
        c = ev_trho(C, d - 2, 2 - d, route="closed")
        assert iso_test(t, c) is not None
        back = ev_trho_inverse(ev_trho(C, d - 2, 2 - d), d - 2, 2 - d)
        assert iso_test(back, C) is not None
