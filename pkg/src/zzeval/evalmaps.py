"""Evaluation homomorphisms from the extended affine Hecke algebra to H_d.

For an invertible scalar a there are two algebra maps ev_a and ev'_a fixing
T_1, ..., T_{d-1} and sending

    ev_a(rho)  = a T_1^-1 ... T_{d-1}^-1,
    ev'_a(rho) = a T_1 ... T_{d-1}.

They interact with the bar involution by bar(ev_a(x)) = ev'_{bar(a)}(bar(x)).
This module also provides the Bernstein elements y_i and y_i^*, which satisfy
T_i^-1 y_i T_i^-1 = y_{i+1} and T_i y_i^* T_i = y_{i+1}^*, and are normalized
so that ev_a(y_1) = a and ev'_a(y_1^*) = a.
"""

from __future__ import annotations

from .hecke import HeckeElement
from .scalars import LaurentPoly


class EvaluationMap:
    """One of the two evaluation maps, determined by prime=False/True."""

    def __init__(self, d: int, a: LaurentPoly, prime: bool = False):
        if not isinstance(a, LaurentPoly):
            a = LaurentPoly.from_int(a)
        if not a.is_monomial():
            raise ValueError("the evaluation parameter must be invertible")
        self.d = d
        self.a = a
        self.prime = prime
        rho_img = HeckeElement.one(d).scale(a)
        for i in range(1, d):
            factor = HeckeElement.T(d, i) if prime else HeckeElement.T_inv(d, i)
            rho_img = rho_img * factor
        self.rho_image = rho_img
        inv = HeckeElement.one(d).scale(a ** (-1))
        for i in range(d - 1, 0, -1):
            factor = HeckeElement.T_inv(d, i) if prime else HeckeElement.T(d, i)
            inv = inv * factor
        self.rho_image_inv = inv
        self._rho_powers = {0: HeckeElement.one(d), 1: rho_img, -1: inv}

    def _rho_power(self, m: int) -> HeckeElement:
        if m not in self._rho_powers:
            step = self.rho_image if m > 0 else self.rho_image_inv
            self._rho_powers[m] = self._rho_power(m - (1 if m > 0 else -1)) * step
        return self._rho_powers[m]

    def __call__(self, x: HeckeElement) -> HeckeElement:
        if x.d != self.d:
            raise ValueError("mismatched d")
        result = HeckeElement.zero(self.d)
        for g, c in x.terms.items():
            m, word = g.reduced_word()
            piece = self._rho_power(m)
            for i in word:
                piece = piece * (
                    self.t0_image() if i == 0 else HeckeElement.T(self.d, i)
                )
            result = result + piece.scale(c)
        return result

    def t0_image(self) -> HeckeElement:
        """ev(T_0), computed as ev(rho) T_{d-1} ev(rho)^-1."""
        if not hasattr(self, "_t0"):
            self._t0 = (
                self.rho_image * HeckeElement.T(self.d, self.d - 1) * self.rho_image_inv
            )
        return self._t0


def ev(d: int, a) -> EvaluationMap:
    return EvaluationMap(d, a, prime=False)


def ev_prime(d: int, a) -> EvaluationMap:
    return EvaluationMap(d, a, prime=True)


def t0_closed_formula(d: int, prime: bool = False) -> HeckeElement:
    """T_{d-1} ... T_2 T_1 T_2^-1 ... T_{d-1}^-1, with inverses swapped for ev'."""
    out = HeckeElement.one(d)
    for i in range(d - 1, 1, -1):
        out = out * (HeckeElement.T_inv(d, i) if prime else HeckeElement.T(d, i))
    out = out * HeckeElement.T(d, 1)
    for i in range(2, d):
        out = out * (HeckeElement.T(d, i) if prime else HeckeElement.T_inv(d, i))
    return out


def b0_closed_formula(d: int, prime: bool = False) -> HeckeElement:
    """(b_{d-1}-q)...(b_1-q) b_1 (b_1-q^-1)...(b_{d-1}-q^-1), or the bar-swap."""
    q = LaurentPoly.q()
    qinv = LaurentPoly.monomial(-1)
    left_c, right_c = (qinv, q) if prime else (q, qinv)
    out = HeckeElement.one(d)
    for i in range(d - 1, 0, -1):
        out = out * (HeckeElement.b(d, i) - HeckeElement.one(d).scale(left_c))
    out = out * HeckeElement.b(d, 1)
    for i in range(1, d):
        out = out * (HeckeElement.b(d, i) - HeckeElement.one(d).scale(right_c))
    return out


def bernstein_y(d: int, i: int, star: bool = False) -> HeckeElement:
    """The Bernstein element y_i (or y_i^* when star=True)."""
    if not 1 <= i <= d - 1 and i != 1:
        raise ValueError(f"Bernstein index {i} out of range")
    out = HeckeElement.one(d)
    for k in range(i - 1, 0, -1):
        out = out * (HeckeElement.T(d, k) if star else HeckeElement.T_inv(d, k))
    out = out * HeckeElement.rho_elt(d)
    for k in range(d - 1, i - 1, -1):
        out = out * (HeckeElement.T_inv(d, k) if star else HeckeElement.T(d, k))
    return out
