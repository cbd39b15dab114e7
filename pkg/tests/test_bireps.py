"""The distinguished objects X_0, ..., X_{d-1} and their verification suites."""

import pytest

from zzeval.bireps import (
    build_X_objects, hom_dimension_evidence_nonfullness, rouquier_lemma_suite,
    verify_decategorification, verify_end_algebra, verify_phi_compatibility,
    verify_prop_invariant,
)
from zzeval.homotopy import iso_test


def assert_all_pass(reports):
    failing = [rep for rep in reports if not rep["pass"]]
    assert not failing, failing


@pytest.mark.parametrize("d", [3, 4])
def test_x_objects_are_minimal(d):
    X = build_X_objects(d)
    assert set(X) == set(range(d))
    for a, C in X.items():
        assert iso_test(C, C.minimize()) is not None


@pytest.mark.parametrize("d", [3, 4])
def test_prop_invariant(d):
    assert_all_pass(verify_prop_invariant(d))


@pytest.mark.parametrize("d", [3, 4])
def test_prop_invariant_nondefault_twist(d):
    assert_all_pass(verify_prop_invariant(d, d, 3 - d))


@pytest.mark.parametrize("d", [3, 4])
def test_end_algebra(d):
    assert_all_pass(verify_end_algebra(d))


@pytest.mark.parametrize("d", [3, 4])
def test_decategorification(d):
    assert_all_pass(verify_decategorification(d))


@pytest.mark.parametrize("d", [3, 4])
def test_phi_compatibility(d):
    assert_all_pass(verify_phi_compatibility(d))


@pytest.mark.parametrize("d", [3])
def test_rouquier_lemma_suite(d):
    assert_all_pass(rouquier_lemma_suite(d))


@pytest.mark.parametrize("d", [3, 4])
def test_hom_dimension_evidence(d):
    assert_all_pass(hom_dimension_evidence_nonfullness(d))
