"""Exact scalar arithmetic: Laurent polynomials and rational functions in q.

Laurent polynomials are stored as dictionaries {exponent: Fraction} with all
zero coefficients removed, so equality of dictionaries is equality of
polynomials.  Rational functions are stored as a reduced fraction
q^val * N(q) / D(q) with N, D coprime polynomials, D monic with nonzero
constant term.  Both types overload the usual arithmetic operators and are
hashable, so they can serve as scalars for generic exact linear algebra.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]


def _coeff(c: Coeff) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class LaurentPoly:
    """A Laurent polynomial in q with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, Coeff] | None = None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _coeff(c)
                if c != 0:
                    clean[int(e)] = c
        self.coeffs = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def from_int(n: Coeff) -> "LaurentPoly":
        return LaurentPoly({0: n})

    @staticmethod
    def monomial(exp: int, coeff: Coeff = 1) -> "LaurentPoly":
        return LaurentPoly({exp: coeff})

    @staticmethod
    def q() -> "LaurentPoly":
        return LaurentPoly({1: 1})

    @staticmethod
    def quantum_int(n: int) -> "LaurentPoly":
        """The balanced quantum integer [n] = (q^n - q^-n)/(q - q^-1)."""
        if n < 0:
            return -LaurentPoly.quantum_int(-n)
        return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == {0: Fraction(1)}

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) - c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(out)

    def __rmul__(self, other) -> "LaurentPoly":
        return self.__mul__(other)

    def scale(self, c: Coeff) -> "LaurentPoly":
        c = _coeff(c)
        return LaurentPoly({e: c * v for e, v in self.coeffs.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            ((e, c),) = self.coeffs.items()
            return LaurentPoly({-e: Fraction(1) / c}) ** (-n)
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def bar(self) -> "LaurentPoly":
        """The bar involution q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    # -- structure ----------------------------------------------------

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of zero polynomial")
        return max(self.coeffs)

    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("valuation of zero polynomial")
        return min(self.coeffs)

    def constant_coeff(self) -> Fraction:
        return self.coeffs.get(0, Fraction(0))

    def subs_int(self, value: Fraction) -> Fraction:
        """Evaluate at a nonzero rational value of q."""
        value = _coeff(value)
        return sum((c * value**e for e, c in self.coeffs.items()), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.from_int(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
            else:
                qp = "q" if e == 1 else f"q^{e}"
                if c == 1:
                    parts.append(qp)
                elif c == -1:
                    parts.append(f"-{qp}")
                else:
                    parts.append(f"{c}*{qp}")
        s = parts[0]
        for p in parts[1:]:
            s += " - " + p[1:] if p.startswith("-") else " + " + p
        return s


# -- dense polynomial helpers used for gcd reduction -------------------


def _poly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = Fraction(1) / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        f = a[i + len(b) - 1] * inv
        q[i] = f
        if f:
            for j, bj in enumerate(b):
                a[i + j] -= f * bj
    return _poly_trim(q), _poly_trim(a)


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if a:
        inv = Fraction(1) / a[-1]
        a = [c * inv for c in a]
    return a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _to_poly(p: LaurentPoly):
    """Return (valuation, coefficient list) with nonzero constant term."""
    if p.is_zero():
        return 0, []
    v = p.valuation()
    d = p.degree()
    return v, [p.coeffs.get(e, Fraction(0)) for e in range(v, d + 1)]


def _from_poly(val: int, coeffs: list[Fraction]) -> LaurentPoly:
    return LaurentPoly({val + i: c for i, c in enumerate(coeffs)})


class RationalFunction:
    """An element of Q(q), kept in reduced canonical form.

    The canonical form is q^val * N(q) / D(q) where N and D are coprime
    polynomials with nonzero constant terms and D is monic.
    """

    __slots__ = ("val", "num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one()
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.val, self.num, self.den = 0, [], [Fraction(1)]
            return
        v1, n = _to_poly(num)
        v2, d = _to_poly(den)
        g = _poly_gcd(n, d)
        if len(g) > 1:
            n, _ = _poly_divmod(n, g)
            d, _ = _poly_divmod(d, g)
        lead = d[-1]
        if lead != 1:
            inv = Fraction(1) / lead
            n = [c * inv for c in n]
            d = [c * inv for c in d]
        self.val, self.num, self.den = v1 - v2, n, d

    @staticmethod
    def from_laurent(p: LaurentPoly) -> "RationalFunction":
        return RationalFunction(p)

    @staticmethod
    def from_int(n: Coeff) -> "RationalFunction":
        return RationalFunction(LaurentPoly.from_int(n))

    @staticmethod
    def zero() -> "RationalFunction":
        return RationalFunction(LaurentPoly.zero())

    @staticmethod
    def one() -> "RationalFunction":
        return RationalFunction(LaurentPoly.one())

    def numerator_laurent(self) -> LaurentPoly:
        return _from_poly(self.val, self.num)

    def denominator_poly(self) -> LaurentPoly:
        return _from_poly(0, self.den)

    def is_zero(self) -> bool:
        return not self.num

    def is_laurent(self) -> bool:
        return self.den == [Fraction(1)]

    def to_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self!r} is not a Laurent polynomial")
        return self.numerator_laurent()

    @staticmethod
    def _coerce(x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, LaurentPoly):
            return RationalFunction(x)
        if isinstance(x, (int, Fraction)):
            return RationalFunction.from_int(x)
        raise TypeError(f"cannot coerce {x!r} to RationalFunction")

    def __add__(self, other) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        num = (
            self.numerator_laurent() * other.denominator_poly()
            + other.numerator_laurent() * self.denominator_poly()
        )
        return RationalFunction(num, self.denominator_poly() * other.denominator_poly())

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        return self + (-RationalFunction._coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return RationalFunction._coerce(other) - self

    def __neg__(self) -> "RationalFunction":
        out = RationalFunction.zero()
        out.val = self.val
        out.num = [-c for c in self.num]
        out.den = list(self.den)
        return out

    def __mul__(self, other) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        return RationalFunction(
            self.numerator_laurent() * other.numerator_laurent(),
            self.denominator_poly() * other.denominator_poly(),
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = RationalFunction._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(
            self.numerator_laurent() * other.denominator_poly(),
            self.denominator_poly() * other.numerator_laurent(),
        )

    def __rtruediv__(self, other) -> "RationalFunction":
        return RationalFunction._coerce(other) / self

    def inverse(self) -> "RationalFunction":
        return RationalFunction.one() / self

    def bar(self) -> "RationalFunction":
        """The bar involution q -> q^-1."""
        return RationalFunction(
            self.numerator_laurent().bar(), self.denominator_poly().bar()
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = RationalFunction._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (
            self.val == other.val and self.num == other.num and self.den == other.den
        )

    def __hash__(self):
        return hash((self.val, tuple(self.num), tuple(self.den)))

    def __repr__(self) -> str:
        n = repr(self.numerator_laurent())
        if self.is_laurent():
            return n
        return f"({n})/({self.denominator_poly()!r})"


# -- handy module-level constants --------------------------------------

Q = LaurentPoly.q()
ONE = LaurentPoly.one()
ZERO = LaurentPoly.zero()
QINV = LaurentPoly.monomial(-1)
TWO_Q = LaurentPoly.quantum_int(2)
