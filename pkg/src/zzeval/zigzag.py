"""Affine and finite zigzag algebras as graded path algebras.

The affine algebra for d >= 3 lives on the cycle with vertices 0, ..., d-1.
Its basis consists of the idempotents e_i (degree 0), the arrows i|j between
neighbouring vertices (degree 1, written target|source: i|j runs from j to
i), and the loops l_i (degree 2).  Products compose left-after-right,
(a|b)(b|c) = a|b|c, all length-two paths between distinct vertices vanish,
and (i|j)(j|i) = l_i except for (0|d-1)(d-1|0) = (-1)^d l_0.  The total
dimension is 4d.

The finite algebra is the idempotent truncation to vertices 1, ..., d-1,
of dimension 4(d-1) - 2.

The trace form tr(l_i) = 1, tr = 0 in degrees < 2 is non-degenerate, and the
rotation automorphism tau shifts vertices by one, picking up a sign (-1)^d
on the arrow 0|d-1.  Consequently tau^d = id for even d and tau^{2d} = id
for odd d.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class ZigzagAlgebra:
    """The zigzag path algebra on a cycle (affine) or a segment (finite)."""

    def __init__(self, d: int, affine: bool = True):
        if d < 3:
            raise ValueError("need d >= 3")
        self.d = d
        self.affine = affine
        self.vertices = list(range(d)) if affine else list(range(1, d))
        basis: list[tuple] = []
        basis += [("e", i) for i in self.vertices]
        basis += [("a", i, j) for i in self.vertices for j in self.vertices
                  if self._adjacent(i, j)]
        basis += [("l", i) for i in self.vertices]
        self.basis = basis
        self.index = {b: k for k, b in enumerate(basis)}
        self.dim = len(basis)

    def _adjacent(self, i: int, j: int) -> bool:
        if i == j:
            return False
        if self.affine:
            return (i - j) % self.d in (1, self.d - 1)
        return abs(i - j) == 1

    # -- bookkeeping for basis elements ---------------------------------

    @staticmethod
    def degree(b: tuple) -> int:
        return {"e": 0, "a": 1, "l": 2}[b[0]]

    @staticmethod
    def target(b: tuple) -> int:
        return b[1]

    @staticmethod
    def source(b: tuple) -> int:
        return b[2] if b[0] == "a" else b[1]

    # -- structure constants --------------------------------------------

    def mul_basis(self, x: tuple, y: tuple) -> tuple[Fraction, tuple] | None:
        """Product of two basis elements: (coefficient, basis) or None."""
        if self.source(x) != self.target(y):
            return None
        kx, ky = x[0], y[0]
        if kx == "e":
            return Fraction(1), y
        if ky == "e":
            return Fraction(1), x
        if kx == "l" or ky == "l":
            return None
        # two arrows i|j then j|k
        i, j, k = x[1], x[2], y[2]
        if i != k:
            return None
        if self.affine and i == 0 and j == self.d - 1:
            return Fraction((-1) ** self.d), ("l", 0)
        return Fraction(1), ("l", i)

    def one(self) -> "ZigzagElement":
        return ZigzagElement(
            self, {self.index[("e", i)]: Fraction(1) for i in self.vertices}
        )

    def element(self, b: tuple, coeff=1) -> "ZigzagElement":
        return ZigzagElement(self, {self.index[b]: Fraction(coeff)})

    def e(self, i: int) -> "ZigzagElement":
        return self.element(("e", i))

    def arrow(self, i: int, j: int) -> "ZigzagElement":
        """The arrow i|j from vertex j to vertex i."""
        return self.element(("a", i, j))

    def loop(self, i: int) -> "ZigzagElement":
        return self.element(("l", i))

    # -- trace form -------------------------------------------------------

    def trace_basis(self, b: tuple) -> Fraction:
        return Fraction(1) if b[0] == "l" else Fraction(0)

    def dual_basis_element(self, b: tuple) -> "ZigzagElement":
        """The element b* with tr(b b*) = 1 and tr(b c*) = 0 for c != b."""
        kind = b[0]
        if kind == "e":
            return self.loop(b[1])
        if kind == "l":
            return self.e(b[1])
        i, j = b[1], b[2]
        if self.affine and i == 0 and j == self.d - 1:
            return self.element(("a", j, i), (-1) ** self.d)
        return self.element(("a", j, i))

    # -- rotation automorphism ---------------------------------------------

    def tau_basis(self, b: tuple, power: int = 1) -> tuple[Fraction, tuple]:
        """tau^power on a basis element (affine only)."""
        if not self.affine:
            raise ValueError("tau is only defined for the affine algebra")
        coeff, cur = Fraction(1), b
        step = 1 if power >= 0 else -1
        for _ in range(abs(power)):
            coeff2, cur = self._tau_step(cur) if step == 1 else self._tau_inv_step(cur)
            coeff *= coeff2
        return coeff, cur

    def _tau_step(self, b: tuple) -> tuple[Fraction, tuple]:
        d = self.d
        sh = lambda v: (v + 1) % d
        if b[0] == "e":
            return Fraction(1), ("e", sh(b[1]))
        if b[0] == "l":
            if b[1] == d - 1:
                return Fraction((-1) ** d), ("l", 0)
            return Fraction(1), ("l", sh(b[1]))
        i, j = b[1], b[2]
        if i == 0 and j == d - 1:
            return Fraction((-1) ** d), ("a", 1, 0)
        return Fraction(1), ("a", sh(i), sh(j))

    def _tau_inv_step(self, b: tuple) -> tuple[Fraction, tuple]:
        for c in self.basis:
            coeff, img = self._tau_step(c)
            if img == b:
                return Fraction(1) / coeff, c
        raise AssertionError("tau is bijective on the basis")

    # -- graded pieces ------------------------------------------------------

    def hom_basis(self, i: int, j: int) -> list[tuple]:
        """Basis of e_i Z e_j (paths from j to i)."""
        return [b for b in self.basis if self.target(b) == i and self.source(b) == j]


@lru_cache(maxsize=None)
def affine_zigzag(d: int) -> ZigzagAlgebra:
    return ZigzagAlgebra(d, affine=True)


@lru_cache(maxsize=None)
def finite_zigzag(d: int) -> ZigzagAlgebra:
    return ZigzagAlgebra(d, affine=False)


class ZigzagElement:
    """A Q-linear combination of zigzag basis paths."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: ZigzagAlgebra, coeffs: dict[int, Fraction] | None = None):
        self.algebra = algebra
        self.coeffs = {}
        if coeffs:
            for k, c in coeffs.items():
                if c != 0:
                    self.coeffs[k] = Fraction(c)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "ZigzagElement") -> "ZigzagElement":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + c
        return ZigzagElement(self.algebra, out)

    def __sub__(self, other: "ZigzagElement") -> "ZigzagElement":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) - c
        return ZigzagElement(self.algebra, out)

    def __neg__(self) -> "ZigzagElement":
        return ZigzagElement(self.algebra, {k: -c for k, c in self.coeffs.items()})

    def scale(self, c) -> "ZigzagElement":
        c = Fraction(c)
        return ZigzagElement(self.algebra, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other) -> "ZigzagElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        A = self.algebra
        out: dict[int, Fraction] = {}
        for k1, c1 in self.coeffs.items():
            for k2, c2 in other.coeffs.items():
                prod = A.mul_basis(A.basis[k1], A.basis[k2])
                if prod is not None:
                    c, b = prod
                    k = A.index[b]
                    out[k] = out.get(k, Fraction(0)) + c1 * c2 * c
        return ZigzagElement(A, out)

    def __rmul__(self, other) -> "ZigzagElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZigzagElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def trace(self) -> Fraction:
        A = self.algebra
        return sum(
            (c * A.trace_basis(A.basis[k]) for k, c in self.coeffs.items()),
            Fraction(0),
        )

    def tau(self, power: int = 1) -> "ZigzagElement":
        A = self.algebra
        out: dict[int, Fraction] = {}
        for k, c in self.coeffs.items():
            coeff, b = A.tau_basis(A.basis[k], power)
            idx = A.index[b]
            out[idx] = out.get(idx, Fraction(0)) + c * coeff
        return ZigzagElement(A, out)

    def is_homogeneous(self) -> bool:
        degs = {self.algebra.degree(self.algebra.basis[k]) for k in self.coeffs}
        return len(degs) <= 1

    def homogeneous_degree(self) -> int | None:
        if self.is_zero():
            return None
        degs = {self.algebra.degree(self.algebra.basis[k]) for k in self.coeffs}
        if len(degs) != 1:
            raise ValueError("element is not homogeneous")
        return degs.pop()

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        names = []
        for k in sorted(self.coeffs):
            b = self.algebra.basis[k]
            if b[0] == "e":
                nm = f"e{b[1]}"
            elif b[0] == "l":
                nm = f"l{b[1]}"
            else:
                nm = f"({b[1]}|{b[2]})"
            c = self.coeffs[k]
            names.append(nm if c == 1 else f"{c}*{nm}")
        return " + ".join(names)
