"""Hecke algebras of the (extended) affine symmetric group over Q(q).

Elements are stored in the regular basis {rho^m T_w} with w in the affine
symmetric group, encoded as a dictionary {AffinePerm: LaurentPoly} keyed by
the full group element rho^m w.  The quadratic relation used throughout is

    (T_i + q)(T_i - q^-1) = 0,   so   T_i^2 = (q^-1 - q) T_i + 1,

with T_i^-1 = T_i + q - q^-1 and b_i = T_i + q satisfying b_i^2 = [2] b_i.
The finite Hecke algebra is the span of T_w for finite permutations, i.e.
window values all within 1..d and rho-power zero.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import LaurentPoly
from .weyl import AffinePerm


def _scalar(c) -> LaurentPoly:
    if isinstance(c, LaurentPoly):
        return c
    if isinstance(c, (int, Fraction)):
        return LaurentPoly.from_int(c)
    raise TypeError(f"cannot use {c!r} as a Hecke coefficient")


class HeckeElement:
    """An element of the extended affine Hecke algebra for fixed d."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: dict[AffinePerm, LaurentPoly] | None = None):
        self.d = d
        self.terms = {}
        if terms:
            for g, c in terms.items():
                if not c.is_zero():
                    self.terms[g] = c

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(d: int) -> "HeckeElement":
        return HeckeElement(d)

    @staticmethod
    def one(d: int) -> "HeckeElement":
        return HeckeElement(d, {AffinePerm.identity(d): LaurentPoly.one()})

    @staticmethod
    def basis(d: int, g: AffinePerm, coeff=1) -> "HeckeElement":
        return HeckeElement(d, {g: _scalar(coeff)})

    @staticmethod
    def T(d: int, i: int) -> "HeckeElement":
        return HeckeElement.basis(d, AffinePerm.simple(d, i))

    @staticmethod
    def T_inv(d: int, i: int) -> "HeckeElement":
        return HeckeElement(
            d,
            {
                AffinePerm.simple(d, i): LaurentPoly.one(),
                AffinePerm.identity(d): LaurentPoly({1: 1, -1: -1}),
            },
        )

    @staticmethod
    def b(d: int, i: int) -> "HeckeElement":
        """The Kazhdan-Lusztig generator b_i = T_i + q."""
        return HeckeElement(
            d,
            {
                AffinePerm.simple(d, i): LaurentPoly.one(),
                AffinePerm.identity(d): LaurentPoly.q(),
            },
        )

    @staticmethod
    def rho_elt(d: int, m: int = 1) -> "HeckeElement":
        return HeckeElement.basis(d, AffinePerm.rho(d) ** m)

    @staticmethod
    def T_word(d: int, word, coeff=1) -> "HeckeElement":
        out = HeckeElement.one(d) * _scalar(coeff)
        for i in word:
            out = out * HeckeElement.T(d, i)
        return out

    # -- linear structure -------------------------------------------------

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, LaurentPoly.zero()) + c
        return HeckeElement(self.d, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, LaurentPoly.zero()) - c
        return HeckeElement(self.d, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.d, {g: -c for g, c in self.terms.items()})

    def scale(self, c) -> "HeckeElement":
        c = _scalar(c)
        return HeckeElement(self.d, {g: c * v for g, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def coeff(self, g: AffinePerm) -> LaurentPoly:
        return self.terms.get(g, LaurentPoly.zero())

    # -- multiplication ----------------------------------------------------

    def _times_simple(self, i: int) -> "HeckeElement":
        """Right multiplication by T_i."""
        d = self.d
        s = AffinePerm.simple(d, i)
        out: dict[AffinePerm, LaurentPoly] = {}
        qq = LaurentPoly({-1: 1, 1: -1})
        for g, c in self.terms.items():
            gs = g * s
            if g.has_descent(i):
                # T_w T_i = T_{w s_i} + (q^-1 - q) T_w when length drops
                out[gs] = out.get(gs, LaurentPoly.zero()) + c
                out[g] = out.get(g, LaurentPoly.zero()) + c * qq
            else:
                out[gs] = out.get(gs, LaurentPoly.zero()) + c
        return HeckeElement(d, out)

    def _times_rho(self, m: int) -> "HeckeElement":
        """Right multiplication by rho^m: T_w rho^m = rho^m T_{rho^-m w rho^m}."""
        d = self.d
        r = AffinePerm.rho(d) ** m
        return HeckeElement(d, {g * r: c for g, c in self.terms.items()})

    def __mul__(self, other) -> "HeckeElement":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        if self.d != other.d:
            raise ValueError("mismatched d")
        result = HeckeElement.zero(self.d)
        for g, c in other.terms.items():
            m, word = g.reduced_word()
            piece = self._times_rho(m) if m else self
            for i in word:
                piece = piece._times_simple(i)
            result = result + piece.scale(c)
        return result

    def __rmul__(self, other) -> "HeckeElement":
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "HeckeElement":
        if n < 0:
            return self.inverse() ** (-n)
        out = HeckeElement.one(self.d)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "HeckeElement":
        """Inverse of a basis element rho^m T_w (up to an invertible scalar)."""
        if len(self.terms) != 1:
            raise ValueError("only monomial elements are inverted directly")
        ((g, c),) = self.terms.items()
        if not c.is_monomial():
            raise ValueError("coefficient is not invertible")
        m, word = g.reduced_word()
        out = HeckeElement.one(self.d).scale(c ** (-1))
        for i in reversed(word):
            out = out * HeckeElement.T_inv(self.d, i)
        return out * HeckeElement.rho_elt(self.d, -m) if m else out

    # -- bar involution -----------------------------------------------------

    def bar(self) -> "HeckeElement":
        """q -> q^-1, bar(T_w) = T_{w^-1}^-1 and bar(rho) = rho."""
        result = HeckeElement.zero(self.d)
        for g, c in self.terms.items():
            m, word = g.reduced_word()
            piece = HeckeElement.rho_elt(self.d, m)
            for i in word:
                piece = piece * HeckeElement.T_inv(self.d, i)
            result = result + piece.scale(c.bar())
        return result

    # -- predicates -----------------------------------------------------

    def is_finite(self) -> bool:
        """Whether the element lies in the finite Hecke algebra H_d."""
        return all(
            all(1 <= v <= self.d for v in g.window) for g in self.terms
        )

    def is_affine(self) -> bool:
        """Whether the element lies in the non-extended affine algebra."""
        return all(g.rho_power() == 0 for g in self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for g in sorted(self.terms, key=lambda g: (g.length(), g.window)):
            m, word = g.reduced_word()
            name = ""
            if m:
                name += f"rho^{m}" if m != 1 else "rho"
            if word:
                name += "T[" + ",".join(map(str, word)) + "]"
            if not name:
                name = "1"
            parts.append(f"({self.terms[g]!r})*{name}")
        return " + ".join(parts)
