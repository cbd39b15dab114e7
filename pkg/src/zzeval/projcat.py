"""Graded projective zigzag modules and the functors acting on them.

Objects are finite direct sums of shifted indecomposable projectives
Ze_i<t>; the grading convention is (M<t>)_n = M_{n+t}, so the generator of
Ze_i<t> sits in degree -t.  A homogeneous map Ze_i<a> -> Ze_j<b> of degree
delta is right multiplication by an element of e_i Z e_j of path degree
b - a + delta; morphisms are matrices of such entries.

The functor P(i) is tensoring with Ze_i (x) e_i Z <1>:

    P(i)(Ze_j<t>) = (+)_{x in basis(e_i Z e_j)} Ze_i<t + 1 - deg x>,

acting on a right-multiplication morphism by multiplying the generator tags.
The rotation functor Tau (affine only) sends Ze_i<t> to Ze_{i+1}<t> and
twists morphism entries by tau; it satisfies Tau P(i) = P(i+1) Tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .zigzag import ZigzagAlgebra, ZigzagElement


@dataclass(frozen=True)
class ProjObject:
    """A direct sum of shifted projectives, as a tuple of (vertex, shift)."""

    algebra: ZigzagAlgebra
    summands: tuple[tuple[int, int], ...]

    @staticmethod
    def generator(algebra: ZigzagAlgebra, vertex: int, shift: int = 0) -> "ProjObject":
        return ProjObject(algebra, ((vertex, shift),))

    @staticmethod
    def zero(algebra: ZigzagAlgebra) -> "ProjObject":
        return ProjObject(algebra, ())

    def __len__(self) -> int:
        return len(self.summands)

    def is_zero(self) -> bool:
        return not self.summands

    def shifted(self, t: int) -> "ProjObject":
        return ProjObject(self.algebra, tuple((v, s + t) for v, s in self.summands))

    def __add__(self, other: "ProjObject") -> "ProjObject":
        return ProjObject(self.algebra, self.summands + other.summands)

    def select(self, keep: list[int]) -> "ProjObject":
        return ProjObject(self.algebra, tuple(self.summands[k] for k in keep))


class ModMorphism:
    """A homogeneous morphism between ProjObjects.

    entries[r][c] is the zigzag element z with the c-th source generator
    mapping to (target generator r) * z; composition therefore multiplies
    entries left to right: (g o f).entry = f.entry * g.entry.
    """

    __slots__ = ("src", "tgt", "entries", "degree")

    def __init__(self, src: ProjObject, tgt: ProjObject, entries, degree: int = 0,
                 check: bool = True):
        self.src = src
        self.tgt = tgt
        self.entries = entries
        self.degree = degree
        if check:
            self._validate()

    def _validate(self):
        A = self.src.algebra
        assert len(self.entries) == len(self.tgt)
        for r, row in enumerate(self.entries):
            assert len(row) == len(self.src)
            jv, jb = self.tgt.summands[r]
            for c, z in enumerate(row):
                if z.is_zero():
                    continue
                iv, ia = self.src.summands[c]
                assert z.homogeneous_degree() == jb - ia + self.degree, (
                    f"entry ({r},{c}) has wrong degree"
                )
                for k in z.coeffs:
                    b = A.basis[k]
                    assert A.target(b) == iv and A.source(b) == jv, (
                        f"entry ({r},{c}) not in e_{iv} Z e_{jv}"
                    )

    @staticmethod
    def zero(src: ProjObject, tgt: ProjObject, degree: int = 0) -> "ModMorphism":
        A = src.algebra
        z = ZigzagElement(A)
        rows = [[z for _ in range(len(src))] for _ in range(len(tgt))]
        return ModMorphism(src, tgt, rows, degree, check=False)

    @staticmethod
    def identity(obj: ProjObject) -> "ModMorphism":
        A = obj.algebra
        f = ModMorphism.zero(obj, obj)
        for k, (v, _) in enumerate(obj.summands):
            f.entries[k][k] = A.e(v)
        return f

    def compose(self, other: "ModMorphism") -> "ModMorphism":
        """self o other (apply other first)."""
        assert other.tgt.summands == self.src.summands
        A = self.src.algebra
        out = ModMorphism.zero(other.src, self.tgt, self.degree + other.degree)
        for r in range(len(self.tgt)):
            for c in range(len(other.src)):
                acc = ZigzagElement(A)
                for m in range(len(self.src)):
                    a = other.entries[m][c]
                    b = self.entries[r][m]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                out.entries[r][c] = acc
        return out

    def __add__(self, other: "ModMorphism") -> "ModMorphism":
        assert self.degree == other.degree
        out = ModMorphism.zero(self.src, self.tgt, self.degree)
        for r in range(len(self.tgt)):
            for c in range(len(self.src)):
                out.entries[r][c] = self.entries[r][c] + other.entries[r][c]
        return out

    def __neg__(self) -> "ModMorphism":
        return self.scale(-1)

    def __sub__(self, other: "ModMorphism") -> "ModMorphism":
        return self + (-other)

    def scale(self, c) -> "ModMorphism":
        out = ModMorphism.zero(self.src, self.tgt, self.degree)
        for r in range(len(self.tgt)):
            for c2 in range(len(self.src)):
                out.entries[r][c2] = self.entries[r][c2].scale(c)
        return out

    def is_zero(self) -> bool:
        return all(z.is_zero() for row in self.entries for z in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModMorphism):
            return NotImplemented
        return (
            self.src.summands == other.src.summands
            and self.tgt.summands == other.tgt.summands
            and all(
                self.entries[r][c] == other.entries[r][c]
                for r in range(len(self.tgt))
                for c in range(len(self.src))
            )
        )

    def restrict(self, src_keep: list[int], tgt_keep: list[int]) -> "ModMorphism":
        return ModMorphism(
            self.src.select(src_keep),
            self.tgt.select(tgt_keep),
            [[self.entries[r][c] for c in src_keep] for r in tgt_keep],
            self.degree,
            check=False,
        )

    def scalar_part(self):
        """The matrix of idempotent coefficients (the reduction mod radical).

        Entry (r, c) is the rational coefficient of e_i in entries[r][c] when
        source and target summands agree, else 0.
        """
        A = self.src.algebra
        out = []
        for r, (jv, jb) in enumerate(self.tgt.summands):
            row = []
            for c, (iv, ia) in enumerate(self.src.summands):
                val = Fraction(0)
                if iv == jv and ia == jb + self.degree:
                    val = self.entries[r][c].coeffs.get(A.index[("e", iv)], Fraction(0))
                row.append(val)
            out.append(row)
        return out

    def __repr__(self) -> str:
        return (
            f"ModMorphism({self.src.summands} -> {self.tgt.summands}, "
            f"deg={self.degree}, entries={self.entries})"
        )


# -- functors -----------------------------------------------------------


class FunctorP:
    """Tensoring with the graded bimodule Ze_i (x) e_i Z <1>."""

    def __init__(self, algebra: ZigzagAlgebra, i: int):
        if i not in algebra.vertices:
            raise ValueError(f"vertex {i} not in algebra")
        self.algebra = algebra
        self.i = i

    def summand_tags(self, vertex: int):
        """The generator tags x in basis(e_i Z e_vertex), in basis order."""
        return self.algebra.hom_basis(self.i, vertex)

    def apply_obj(self, obj: ProjObject) -> ProjObject:
        A = self.algebra
        out = []
        for v, t in obj.summands:
            for x in self.summand_tags(v):
                out.append((self.i, t + 1 - A.degree(x)))
        return ProjObject(A, tuple(out))

    def apply_mor(self, f: ModMorphism) -> ModMorphism:
        A = self.algebra
        src = self.apply_obj(f.src)
        tgt = self.apply_obj(f.tgt)
        out = ModMorphism.zero(src, tgt, f.degree)
        # column/row offsets per original summand
        src_tags = [self.summand_tags(v) for v, _ in f.src.summands]
        tgt_tags = [self.summand_tags(v) for v, _ in f.tgt.summands]
        src_off, acc = [], 0
        for tags in src_tags:
            src_off.append(acc)
            acc += len(tags)
        tgt_off, acc = [], 0
        for tags in tgt_tags:
            tgt_off.append(acc)
            acc += len(tags)
        ei = A.e(self.i)
        for r in range(len(f.tgt)):
            for c in range(len(f.src)):
                z = f.entries[r][c]
                if z.is_zero():
                    continue
                for cx, x in enumerate(src_tags[c]):
                    prod = A.element(x) * z
                    if prod.is_zero():
                        continue
                    for k, coeff in prod.coeffs.items():
                        y = A.basis[k]
                        ry = tgt_tags[r].index(y)
                        out.entries[tgt_off[r] + ry][src_off[c] + cx] = (
                            out.entries[tgt_off[r] + ry][src_off[c] + cx]
                            + ei.scale(coeff)
                        )
        return out


class FunctorTau:
    """The invertible functor Ze_i<t> -> Ze_{i+k}<t> twisting entries by tau^k."""

    def __init__(self, algebra: ZigzagAlgebra, power: int = 1):
        if not algebra.affine:
            raise ValueError("Tau is only defined over the affine algebra")
        self.algebra = algebra
        self.power = power

    def apply_obj(self, obj: ProjObject) -> ProjObject:
        d = self.algebra.d
        return ProjObject(
            self.algebra,
            tuple(((v + self.power) % d, t) for v, t in obj.summands),
        )

    def apply_mor(self, f: ModMorphism) -> ModMorphism:
        src = self.apply_obj(f.src)
        tgt = self.apply_obj(f.tgt)
        rows = [[z.tau(self.power) for z in row] for row in f.entries]
        return ModMorphism(src, tgt, rows, f.degree, check=False)


@dataclass(frozen=True)
class FunctorWord:
    """A composable word of atoms ('P', i), ('Tau', k), ('Shift', t, s).

    Composition is applied right to left: the last atom acts first.  The
    normal form collects all Tau atoms on the left and all shifts into one
    decoration, using Tau P(i) = P(i+1) Tau.
    """

    algebra: ZigzagAlgebra
    atoms: tuple[tuple, ...]

    def normalize(self):
        """Return (tau_power, p_colors, internal_shift, homological_shift)."""
        d = self.algebra.d
        total_tau = sum(a[1] for a in self.atoms if a[0] == "Tau")
        tau_seen = 0
        t_shift = 0
        h_shift = 0
        colors: list[int] = []
        # composition is outermost-first; a Tau sitting to the right of a P
        # crosses it leftward, turning P(i) into P(i-1) per crossing
        for atom in self.atoms:
            kind = atom[0]
            if kind == "Tau":
                tau_seen += atom[1]
            elif kind == "P":
                taus_right = total_tau - tau_seen
                colors.append(
                    (atom[1] - taus_right) % d if self.algebra.affine else atom[1]
                )
            elif kind == "Shift":
                t_shift += atom[1]
                h_shift += atom[2]
            else:
                raise ValueError(f"unknown atom {atom!r}")
        return total_tau, colors, t_shift, h_shift
