"""Concrete graded bimodules over zigzag algebras and their tensor words.

A *word* is a sequence of atoms ('B', i) and ('T', k), standing for the
elementary bimodules

    B_i      = Z e_i (x) e_i Z <1>,
    T^k      = Z^{tau^k}   (underlying space Z, right action twisted:
                            a . m . c = a m tau^k(c)).

The tensor product over Z of such a word collapses to a finite-dimensional
space with an explicit basis: a tuple (z0, y_1, ..., y_m) with z0 in the
algebra basis and y_r in e_{i_r} Z for the r-th B-atom, subject to matching
conditions at each junction (twisted by the T-atoms sitting in the gap).
All 2-morphism images of the finitary birepresentations are implemented as
explicit matrices between these realizations:

    dot (B_i -> 1):        multiply the two halves together,
    dot (1 -> B_i):        the signed coproduct element,
    merge (B_iB_i -> B_i): (-1)^i times the trace of the middle,
    split (B_i -> B_iB_i): insert e_i in the middle,
    colored 4- and 6-valent vertices: zero,
    oriented cups/caps:    the canonical identifications Z^tau Z^{tau^-1} = Z,
    mixed crossings:       the canonical isomorphisms T B_i = B_{i+1} T.
                           The degree-zero intertwiner space underlying each
                           crossing is one-dimensional, so the image is
                           determined up to a scalar; see relations.py for
                           which oriented relations this scalar can satisfy.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .zigzag import ZigzagAlgebra, ZigzagElement

MINUS_ONE = Fraction(-1)

# Normalization of the mixed-crossing isomorphisms.  The degree-zero space of
# bimodule maps underlying each crossing is one-dimensional (see
# intertwiner_dimension), so the only freedom is a scalar; we take the
# canonical twist map itself.  No scalar choice makes every oriented relation
# hold simultaneously -- see check_oriented_dot_slide_creation in relations.py
# and the decisions ledger.
CROSSING_SIGN = Fraction(1)


def tau_power(A: ZigzagAlgebra, b: tuple, power: int) -> tuple[Fraction, tuple]:
    if power == 0 or not A.affine:
        assert power == 0, "twists require the affine algebra"
        return Fraction(1), b
    return A.tau_basis(b, power)


def updot_cases(A: ZigzagAlgebra, i: int, j: int):
    """Terms (coeff, u1, u2) of the coproduct image of e_j in Ze_i (x) e_iZ."""
    d = A.d
    if j == i:
        return [
            (Fraction((-1) ** i), ("l", i), ("e", i)),
            (Fraction((-1) ** i), ("e", i), ("l", i)),
        ]
    if A.affine:
        adjacent = (j - i) % d in (1, d - 1)
    else:
        adjacent = abs(j - i) == 1
    if not adjacent:
        return []
    if A.affine and i == 0 and j == 1:
        sign = Fraction(1)
    elif A.affine and i == 0 and j == d - 1:
        sign = Fraction((-1) ** d)
    else:
        sign = Fraction((-1) ** i)
    return [(sign, ("a", j, i), ("a", i, j))]


def dumbbell_element(A: ZigzagAlgebra, i: int) -> ZigzagElement:
    """The image of 1 under dot-after-updot at color i (a sum of loops)."""
    out = ZigzagElement(A)
    for j in A.vertices:
        for coeff, u1, u2 in updot_cases(A, i, j):
            out = out + (A.element(u1, coeff) * A.element(u2))
    return out


class WordModule:
    """The collapsed realization of a tensor word of B- and T-atoms."""

    def __init__(self, algebra: ZigzagAlgebra, atoms: tuple):
        self.algebra = algebra
        self.atoms = tuple(atoms)
        self.b_colors = [a[1] for a in self.atoms if a[0] == "B"]
        m = len(self.b_colors)
        # gap_twists[g]: net tau-power between B-atom g-1 and B-atom g
        # (g = 0: before the first B; g = m: after the last B).
        self.gap_twists = [0] * (m + 1)
        g = 0
        for a in self.atoms:
            if a[0] == "B":
                g += 1
            else:
                self.gap_twists[g] += a[1]
        self._build_basis()

    def _build_basis(self):
        A = self.algebra
        d = A.d
        m = len(self.b_colors)
        tuples = [(b,) for b in A.basis]
        for r in range(m):
            i = self.b_colors[r]
            need = (i + self.gap_twists[r]) % d if A.affine else i + self.gap_twists[r]
            out = []
            for t in tuples:
                if A.source(t[r]) != need:
                    continue
                for y in A.basis:
                    if A.target(y) == i:
                        out.append(t + (y,))
            tuples = out
        self.basis = tuples
        self.index = {t: k for k, t in enumerate(tuples)}
        self.degrees = [
            sum(A.degree(x) for x in t) - m for t in tuples
        ]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def b_atom_positions(self) -> list[int]:
        return [k for k, a in enumerate(self.atoms) if a[0] == "B"]

    def __repr__(self) -> str:
        return f"WordModule({self.atoms}, dim={self.dim})"


@lru_cache(maxsize=None)
def word_module(algebra: ZigzagAlgebra, atoms: tuple) -> WordModule:
    return WordModule(algebra, atoms)


class BimoduleMap:
    """A homogeneous linear map between word-module realizations."""

    def __init__(self, src: WordModule, tgt: WordModule, degree: int = 0):
        self.src = src
        self.tgt = tgt
        self.degree = degree
        self.matrix = [
            [Fraction(0)] * src.dim for _ in range(tgt.dim)
        ]

    @staticmethod
    def identity(M: WordModule) -> "BimoduleMap":
        f = BimoduleMap(M, M, 0)
        for k in range(M.dim):
            f.matrix[k][k] = Fraction(1)
        return f

    @staticmethod
    def zero(src: WordModule, tgt: WordModule, degree: int = 0) -> "BimoduleMap":
        return BimoduleMap(src, tgt, degree)

    def add_entry(self, tgt_tuple, src_col: int, coeff: Fraction):
        if coeff:
            self.matrix[self.tgt.index[tgt_tuple]][src_col] += coeff

    def compose(self, other: "BimoduleMap") -> "BimoduleMap":
        """self o other (apply other first)."""
        assert other.tgt is self.src
        out = BimoduleMap(other.src, self.tgt, self.degree + other.degree)
        for t in range(self.tgt.dim):
            row = self.matrix[t]
            for mid in range(self.src.dim):
                a = row[mid]
                if a:
                    orow = other.matrix[mid]
                    for s in range(other.src.dim):
                        if orow[s]:
                            out.matrix[t][s] += a * orow[s]
        return out

    def __add__(self, other: "BimoduleMap") -> "BimoduleMap":
        assert self.src is other.src and self.tgt is other.tgt
        assert self.degree == other.degree or self.is_zero() or other.is_zero()
        out = BimoduleMap(self.src, self.tgt, self.degree)
        for t in range(self.tgt.dim):
            for s in range(self.src.dim):
                out.matrix[t][s] = self.matrix[t][s] + other.matrix[t][s]
        return out

    def scale(self, c) -> "BimoduleMap":
        out = BimoduleMap(self.src, self.tgt, self.degree)
        for t in range(self.tgt.dim):
            for s in range(self.src.dim):
                out.matrix[t][s] = self.matrix[t][s] * Fraction(c)
        return out

    def __sub__(self, other: "BimoduleMap") -> "BimoduleMap":
        return self + other.scale(-1)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.matrix for x in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BimoduleMap):
            return NotImplemented
        return (
            self.src.atoms == other.src.atoms
            and self.tgt.atoms == other.tgt.atoms
            and self.matrix == other.matrix
        )


def _expand(A: ZigzagAlgebra, z: ZigzagElement):
    return [(coeff, A.basis[k]) for k, coeff in sorted(z.coeffs.items()) if coeff]


def _word_without(atoms: tuple, pos: int) -> tuple:
    return atoms[:pos] + atoms[pos + 1:]


def _word_insert(atoms: tuple, pos: int, atom) -> tuple:
    return atoms[:pos] + (atom,) + atoms[pos:]


def _b_index(W: WordModule, pos: int) -> int:
    """Which B-atom (0-based) the atom at position pos is."""
    assert W.atoms[pos][0] == "B"
    return sum(1 for a in W.atoms[:pos] if a[0] == "B")


def _twist_before(W: WordModule, pos: int) -> int:
    """Net tau-power between the previous B-atom (or start) and position pos."""
    t = 0
    for a in reversed(W.atoms[:pos]):
        if a[0] == "B":
            break
        t += a[1]
    return t


def box_dotdown(W: WordModule, pos: int) -> BimoduleMap:
    """Remove the B-atom at pos, multiplying its slot into its left neighbour."""
    A = W.algebra
    i = W.atoms[pos][1]
    r = _b_index(W, pos)
    tgt = word_module(A, _word_without(W.atoms, pos))
    f = BimoduleMap(W, tgt, 1)
    tw = W.gap_twists[r]
    for col, t in enumerate(W.basis):
        prev, y = t[r], t[r + 1]
        c, y2 = tau_power(A, y, tw)
        prod = A.element(prev) * A.element(y2, c)
        for coeff, b in _expand(A, prod):
            f.add_entry(t[:r] + (b,) + t[r + 2:], col, coeff)
    return f


def box_updot(W: WordModule, pos: int, i: int) -> BimoduleMap:
    """Insert a B-atom of color i at atom position pos via the coproduct."""
    A = W.algebra
    d = A.d
    tgt = word_module(A, _word_insert(W.atoms, pos, ("B", i)))
    f = BimoduleMap(W, tgt, 1)
    r = sum(1 for a in W.atoms[:pos] if a[0] == "B")
    tw = _twist_before(W, pos)
    for col, t in enumerate(W.basis):
        prev = t[r]
        j = (A.source(prev) - tw) % d if A.affine else A.source(prev) - tw
        for coeff, u1, u2 in updot_cases(A, i, j):
            c1, u1t = tau_power(A, u1, tw)
            prod = A.element(prev) * A.element(u1t, coeff * c1)
            for c2, b in _expand(A, prod):
                f.add_entry(t[:r] + (b, u2) + t[r + 1:], col, c2)
    return f


def box_merge(W: WordModule, pos: int) -> BimoduleMap:
    """Merge the equal-colored B-atoms at pos, pos+1 (trace of the middle)."""
    A = W.algebra
    assert W.atoms[pos] == W.atoms[pos + 1], "merge needs adjacent equal colors"
    i = W.atoms[pos][1]
    r = _b_index(W, pos)
    tgt = word_module(A, _word_without(W.atoms, pos))
    f = BimoduleMap(W, tgt, -1)
    sign = Fraction((-1) ** i)
    for col, t in enumerate(W.basis):
        mid = t[r + 1]
        tr = A.trace_basis(mid)
        if tr:
            f.add_entry(t[: r + 1] + t[r + 2:], col, sign * tr)
    return f


def box_split(W: WordModule, pos: int) -> BimoduleMap:
    """Split the B-atom at pos into two (insert e_i in the middle)."""
    A = W.algebra
    i = W.atoms[pos][1]
    r = _b_index(W, pos)
    tgt = word_module(A, _word_insert(W.atoms, pos, ("B", i)))
    f = BimoduleMap(W, tgt, -1)
    for col, t in enumerate(W.basis):
        f.add_entry(t[: r + 1] + (("e", i),) + t[r + 1:], col, Fraction(1))
    return f


def box_crossing(W: WordModule, pos: int) -> BimoduleMap:
    """Slide the T-atom at pos past the B-atom at pos+1 (T B_i -> B_{i+k} T)."""
    A = W.algebra
    d = A.d
    k = W.atoms[pos][1]
    assert W.atoms[pos][0] == "T" and W.atoms[pos + 1][0] == "B"
    i = W.atoms[pos + 1][1]
    atoms = list(W.atoms)
    atoms[pos], atoms[pos + 1] = ("B", (i + k) % d), ("T", k)
    tgt = word_module(A, tuple(atoms))
    f = BimoduleMap(W, tgt, 0)
    r = _b_index(W, pos + 1)
    for col, t in enumerate(W.basis):
        c, y2 = tau_power(A, t[r + 1], k)
        f.add_entry(t[: r + 1] + (y2,) + t[r + 2:], col, CROSSING_SIGN * c)
    return f


def box_crossing_back(W: WordModule, pos: int) -> BimoduleMap:
    """Slide the B-atom at pos past the T-atom at pos+1 (B_i T -> T B_{i-k})."""
    A = W.algebra
    d = A.d
    assert W.atoms[pos][0] == "B" and W.atoms[pos + 1][0] == "T"
    i = W.atoms[pos][1]
    k = W.atoms[pos + 1][1]
    atoms = list(W.atoms)
    atoms[pos], atoms[pos + 1] = ("T", k), ("B", (i - k) % d)
    tgt = word_module(A, tuple(atoms))
    f = BimoduleMap(W, tgt, 0)
    r = _b_index(W, pos)
    for col, t in enumerate(W.basis):
        c, y2 = tau_power(A, t[r + 1], -k)
        f.add_entry(t[: r + 1] + (y2,) + t[r + 2:], col, CROSSING_SIGN * c)
    return f


def box_cap(W: WordModule, pos: int) -> BimoduleMap:
    """Cancel the opposite T-atoms at pos, pos+1 (Z^tau Z^{tau^-1} = Z)."""
    assert W.atoms[pos][0] == "T" and W.atoms[pos + 1][0] == "T"
    assert W.atoms[pos][1] + W.atoms[pos + 1][1] == 0
    tgt = word_module(W.algebra, _word_without(_word_without(W.atoms, pos + 1), pos))
    f = BimoduleMap(W, tgt, 0)
    for col, t in enumerate(W.basis):
        f.add_entry(t, col, Fraction(1))
    return f


def box_cup(W: WordModule, pos: int, k: int) -> BimoduleMap:
    """Create opposite T-atoms (tau^k then tau^-k) at atom position pos."""
    atoms = _word_insert(_word_insert(W.atoms, pos, ("T", -k)), pos, ("T", k))
    tgt = word_module(W.algebra, atoms)
    f = BimoduleMap(W, tgt, 0)
    for col, t in enumerate(W.basis):
        f.add_entry(t, col, Fraction(1))
    return f


def box_leftmult(W: WordModule, u: ZigzagElement) -> BimoduleMap:
    """Left multiplication by a central-enough element on the leftmost slot."""
    A = W.algebra
    f = BimoduleMap(W, W, max((A.degree(A.basis[k]) for k in u.coeffs), default=0))
    for col, t in enumerate(W.basis):
        prod = u * A.element(t[0])
        for coeff, b in _expand(A, prod):
            f.add_entry((b,) + t[1:], col, coeff)
    return f


def dumbbell_at(W: WordModule, pos: int, i: int) -> BimoduleMap:
    """A color-i dumbbell inserted at atom position pos (updot then dot)."""
    up = box_updot(W, pos, i)
    return box_dotdown(up.tgt, pos).compose(up)


def box_rightmult(W: WordModule, u: ZigzagElement) -> BimoduleMap:
    """Right multiplication on the rightmost slot (twisted past trailing T-atoms)."""
    A = W.algebra
    f = BimoduleMap(W, W, max((A.degree(A.basis[k]) for k in u.coeffs), default=0))
    tw = W.gap_twists[-1]
    for col, t in enumerate(W.basis):
        prod = A.element(t[-1])
        acc = ZigzagElement(A, {})
        for cu, b in _expand(A, u):
            c2, b2 = tau_power(A, b, tw)
            acc = acc + A.element(b2, cu * c2)
        prod = prod * acc
        for coeff, b in _expand(A, prod):
            f.add_entry(t[:-1] + (b,), col, coeff)
    return f


def intertwiner_dimension(W1: WordModule, W2: WordModule, degree: int = 0) -> int:
    """Dimension of the space of degree-homogeneous bimodule maps W1 -> W2.

    Solves the linear system expressing commutation with left and right
    multiplication by every algebra basis element.
    """
    from .linalg import nullspace

    A = W1.algebra
    assert W2.algebra is A
    unknowns = [
        (p, q)
        for p in range(W2.dim)
        for q in range(W1.dim)
        if W2.degrees[p] == W1.degrees[q] + degree
    ]
    if not unknowns:
        return 0
    index = {pq: k for k, pq in enumerate(unknowns)}
    rows = []
    for b in A.basis:
        u = A.element(b)
        for make in (box_leftmult, box_rightmult):
            m1, m2 = make(W1, u), make(W2, u)
            # constraint: M m1 - m2 M = 0, entry (p, q)
            for p in range(W2.dim):
                for q in range(W1.dim):
                    row = {}
                    for r in range(W1.dim):
                        c = m1.matrix[r][q]
                        if c and (p, r) in index:
                            row[index[(p, r)]] = row.get(index[(p, r)], Fraction(0)) + c
                    for s in range(W2.dim):
                        c = m2.matrix[p][s]
                        if c and (s, q) in index:
                            row[index[(s, q)]] = row.get(index[(s, q)], Fraction(0)) - c
                    if row:
                        rows.append(row)
    dense = [
        [row.get(k, Fraction(0)) for k in range(len(unknowns))] for row in rows
    ]
    if not dense:
        return len(unknowns)
    return len(nullspace(dense, Fraction(0), Fraction(1)))
