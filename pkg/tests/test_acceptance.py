"""Acceptance gate: the ten end-to-end criteria, with runtime budgets.

All arithmetic is exact; every comparison is exact equality.  Criterion 8
(the full oriented affine relation suite) is known to fail on one relation
family — see the note at the test.
"""

import json
import time

import pytest

from zzeval import linalg
from zzeval.cellmods import CellModule, iso_to_simple_quotient, minus_q_power
from zzeval.cli import main
from zzeval.evalmaps import EvaluationMap, bernstein_y, ev, ev_prime
from zzeval.hecke import HeckeElement
from zzeval.relations import affine_suite, finite_suite
from zzeval.scalars import LaurentPoly
from zzeval.zigzag import affine_zigzag
from zzeval.bireps import (
    rouquier_lemma_suite, verify_decategorification, verify_end_algebra,
    verify_prop_invariant,
)

Q = LaurentPoly.q()
ZERO = LaurentPoly.zero()


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds
        self.t0 = time.monotonic()

    def check(self):
        elapsed = time.monotonic() - self.t0
        assert elapsed < self.seconds, f"runtime budget exceeded: {elapsed:.1f}s"


def _relation_defects(d):
    one = HeckeElement.one(d)
    T = [HeckeElement.T(d, i) for i in range(d)]
    b = [HeckeElement.b(d, i) for i in range(d)]
    rho = HeckeElement.rho_elt(d)
    rho_inv = HeckeElement.rho_elt(d, -1)
    two = LaurentPoly.quantum_int(2)
    defects = []
    for i in range(d):
        j = (i + 1) % d
        defects += [
            T[i] * T[i] - one - T[i].scale(Q ** (-1) - Q),
            T[i] * T[j] * T[i] - T[j] * T[i] * T[j],
            rho * T[i] * rho_inv - T[j],
            b[i] * b[i] - b[i].scale(two),
            (b[i] * b[j] * b[i] - b[i]) - (b[j] * b[i] * b[j] - b[j]),
        ]
        for k in range(d):
            if (i - k) % d not in (0, 1, d - 1):
                defects.append(T[i] * T[k] - T[k] * T[i])
                defects.append(b[i] * b[k] - b[k] * b[i])
    defects.append(rho * rho_inv - one)
    return defects


def test_criterion_1_hecke_relations():
    """All defining relations hold as exact identities for d in {3,4,5}."""
    budget = Budget(10)
    for d in (3, 4, 5):
        for defect in _relation_defects(d):
            assert defect.is_zero()
    budget.check()


def test_criterion_2_evaluation_maps():
    """Evaluation maps: relation images, normalization, a-independence,
    and the bar-exchange identity, for d in {3,4} and four parameters."""
    budget = Budget(30)
    params = [LaurentPoly.one(), Q, -Q, Q ** 2]
    for d in (3, 4):
        base = {False: None, True: None}
        for a in params:
            for prime in (False, True):
                E = EvaluationMap(d, a, prime)
                # images of all defining relations vanish in H_d
                for defect in _relation_defects(d):
                    assert E(defect).is_zero()
            E = ev(d, a)
            # ev_a(y_1) = a
            assert E(bernstein_y(d, 1)) == HeckeElement.one(d).scale(a)
            # restriction to the non-extended subalgebra is a-independent
            for prime in (False, True):
                Ecur = EvaluationMap(d, a, prime)
                images = (Ecur(HeckeElement.T(d, 0)), Ecur(HeckeElement.b(d, 0)))
                if base[prime] is None:
                    base[prime] = images
                else:
                    assert images == base[prime]
            # bar exchanges the two maps on T_0, rho, b_0
            Ep = ev_prime(d, a.bar())
            for x in (HeckeElement.T(d, 0), HeckeElement.rho_elt(d),
                      HeckeElement.b(d, 0)):
                assert E(x).bar() == Ep(x.bar())
    budget.check()


def test_criterion_3_cell_modules():
    budget = Budget(10)
    for d in range(3, 7):
        for sign in (1, -1):
            mod = CellModule(d, minus_q_power(sign * d), 1)
            assert mod.gram_rank() == d - 1
            n = mod.singular_vector(sign)
            for i in range(d):
                out = linalg.mat_vec(mod._gen_matrix(i), n, ZERO)
                assert all(c.is_zero() for c in out)
            got = linalg.mat_vec(mod._rho_matrix(1), n, ZERO)
            eig = minus_q_power(sign)  # lambda = 1
            assert all((got[k] - eig * n[k]).is_zero() for k in range(d))
        for z in (Q, Q ** 2, LaurentPoly.one()):
            assert CellModule(d, z, 1).gram_rank() == d
        for lam in (LaurentPoly.one(), Q):
            for sign in (1, -1):
                iso_to_simple_quotient(d, lam, sign)
    budget.check()


def test_criterion_4_zigzag_algebras():
    budget = Budget(10)
    from fractions import Fraction
    for d in range(3, 7):
        A = affine_zigzag(d)
        assert len(A.basis) == 4 * d
        n = len(A.basis)
        gram = [
            [(A.element(b) * A.element(c)).trace() for c in A.basis]
            for b in A.basis
        ]
        assert linalg.rank([row[:] for row in gram]) == n
        for b in A.basis:
            dual = A.dual_basis_element(b)
            for c in A.basis:
                want = Fraction(1) if c == b else Fraction(0)
                assert (A.element(c) * dual).trace() == want
        order = d if d % 2 == 0 else 2 * d
        assert all(A.tau_basis(b, order) == (Fraction(1), b) for b in A.basis)
        for k in range(1, order):
            assert not all(A.tau_basis(b, k) == (Fraction(1), b)
                           for b in A.basis)
    budget.check()


def test_criterion_5_rouquier_engine():
    """Inverses, braid relation, conjugation lemmas, snake relations with
    explicit homotopies, and both rotation-functor routes, for d in {3,4}."""
    budget = Budget(300)
    for d in (3, 4):
        for rep in rouquier_lemma_suite(d):
            assert rep["pass"], rep["id"]
    budget.check()


def test_criterion_6_prop_invariant():
    budget = Budget(600)
    for d in (3, 4):
        for rep in verify_prop_invariant(d):
            assert rep["pass"], rep["id"]
    budget.check()


def test_criterion_7_end_algebra():
    budget = Budget(1800)
    for d in (3, 4):
        reports = verify_end_algebra(d)
        for rep in reports:
            assert rep["pass"], rep["id"]
        dim_rep = next(r for r in reports if r["id"].startswith("end-dimension"))
        assert f"{4 * d}" in dim_rep.get("note", "") or dim_rep["pass"]
    budget.check()


def test_criterion_8_relation_suites():
    """100% pass of the finite suite (d in {3,4,5}) and the affine suite
    including all color-0 and oriented relations (d in {3,4}).

    KNOWN FAILURE: the oriented-dot-slide-creation family fails for every
    color.  The implemented crossing map is anti-equivariant for exactly
    this move; flipping the global crossing sign repairs it but breaks the
    (larger) annihilation/pitchfork families.  See the analysis in the
    companion test_relations.py and the repository notes.  The criterion is
    asserted exactly as stated and is therefore expected to fail.
    """
    for d in (3, 4, 5):
        for rep in finite_suite(d):
            assert rep["pass"], rep["id"]
    for d in (3, 4):
        for rep in affine_suite(d):
            assert rep["pass"], (
                f"{rep['id']} fails: the oriented crossing is anti-equivariant "
                "for dot-slide-creation; no global sign fixes it without "
                "breaking other families"
            )


def test_criterion_9_decategorification():
    for d in (3, 4):
        for rep in verify_decategorification(d):
            assert rep["pass"], rep["id"]


@pytest.mark.parametrize("suite", ["cell-radical", "prop-invariant",
                                   "rouquier-lemmas", "relations-Mhat"])
def test_criterion_10_determinism(tmp_path, suite):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", suite, "--d", "3", "--seed", "5"]
    code1 = main(args + ["--json", str(p1)])
    code2 = main(args + ["--json", str(p2)])
    assert code1 == code2
    assert p1.read_bytes() == p2.read_bytes()
    json.loads(p1.read_text())  # valid JSON
