"""Graded projective modules and the bimodule functors on them."""

import pytest

from zzeval.projcat import ProjObject, ModMorphism, FunctorP, FunctorTau
from zzeval.zigzag import affine_zigzag


def _arrow_morphism(A, i, j, shift=0):
    """Ze_i -> Ze_j given by right multiplication with the arrow j -> i."""
    src = ProjObject.generator(A, i, shift)
    tgt = ProjObject.generator(A, j, shift + 1)
    f = ModMorphism.zero(src, tgt)
    f.entries[0][0] = A.arrow(i, j)
    f._validate()
    return f


@pytest.mark.parametrize("d", [3, 4])
def test_composition_and_identity(d):
    A = affine_zigzag(d)
    f = _arrow_morphism(A, 0, 1)
    g = _arrow_morphism(A, 1, 2, 1)
    h = g.compose(f)
    assert h.src.summands == f.src.summands
    assert h.tgt.summands == g.tgt.summands
    # length-two path through distinct vertices dies in the zigzag algebra
    assert h.is_zero()
    ident = ModMorphism.identity(f.src)
    assert f.compose(ident) == f
    assert ModMorphism.identity(f.tgt).compose(f) == f


@pytest.mark.parametrize("d", [3, 4])
def test_functor_p_is_functorial(d):
    A = affine_zigzag(d)
    P = FunctorP(A, 1)
    f = _arrow_morphism(A, 0, 1)
    g = _arrow_morphism(A, 1, 0, 1)
    comp = g.compose(f)
    assert P.apply_mor(g).compose(P.apply_mor(f)) == P.apply_mor(comp)
    ident = ModMorphism.identity(f.src)
    assert P.apply_mor(ident) == ModMorphism.identity(P.apply_obj(f.src))


@pytest.mark.parametrize("d", [3, 4])
def test_functor_p_object_images(d):
    A = affine_zigzag(d)
    # P(i) Ze_j = Ze_i <1> + Ze_i <-1> if i = j, Ze_i if adjacent, 0 otherwise
    for i in range(d):
        P = FunctorP(A, i)
        for j in range(d):
            img = P.apply_obj(ProjObject.generator(A, j))
            expected = sorted(
                (i, 1 - A.degree(b)) for b in A.hom_basis(i, j)
            )
            assert sorted(img.summands) == expected


@pytest.mark.parametrize("d", [3, 4])
def test_functor_tau_permutes_generators(d):
    A = affine_zigzag(d)
    T = FunctorTau(A)
    for j in range(d):
        img = T.apply_obj(ProjObject.generator(A, j))
        assert img.summands == (((j + 1) % d, 0),)


def test_scalar_part_reads_idempotent_coefficients():
    A = affine_zigzag(3)
    obj = ProjObject.generator(A, 1)
    f = ModMorphism.identity(obj).scale(5)
    assert f.scalar_part()[0][0] == 5
