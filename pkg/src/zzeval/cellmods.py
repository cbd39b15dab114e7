"""Graham-Lehrer cell modules and evaluation modules.

The cell module for the parameter z has basis m_0, ..., m_{d-1} (indices mod
d) with

    b_i m_j = [2] m_i          if j = i
            = z m_1            if i = 1, j = 0
            = z^-1 m_0         if i = 0, j = 1
            = m_i              if j = i +- 1 mod d, but none of the above
            = 0                otherwise,

extended to the whole algebra by rho m_j = lambda z^{delta_{j,0}} m_{j+1}.
The bilinear Gram form degenerates exactly at z = (-q)^{+-d}, where the
radical is spanned by n_pm = sum_k (-q)^{-+k} m_k; the simple quotients are
isomorphic to evaluation pull-backs of the simple H_d-module with basis
m_1, ..., m_{d-1}.

All action matrices A satisfy (x m)_i = sum_j A[i][j] m_j-coordinates, i.e.
A[i][j] is the coefficient of m_i in x m_j.
"""

from __future__ import annotations

from .hecke import HeckeElement
from .scalars import LaurentPoly, RationalFunction
from . import linalg


def _mono(p) -> LaurentPoly:
    if not isinstance(p, LaurentPoly):
        p = LaurentPoly.from_int(p)
    if not p.is_monomial():
        raise ValueError("parameter must be an invertible monomial")
    return p


def minus_q_power(n: int) -> LaurentPoly:
    """(-q)^n as a Laurent polynomial."""
    return LaurentPoly.monomial(n, (-1) ** (n % 2))


class _MatrixModule:
    """Shared machinery: a module given by generator action matrices."""

    def __init__(self, d: int, dim: int):
        self.d = d
        self.dim = dim

    def zero_matrix(self):
        z = LaurentPoly.zero()
        return [[z for _ in range(self.dim)] for _ in range(self.dim)]

    def _gen_matrix(self, i: int):
        raise NotImplementedError

    def _rho_matrix(self, sign: int):
        raise NotImplementedError

    def act_hecke(self, x: HeckeElement):
        """Action matrix of an arbitrary element of the extended algebra."""
        total = self.zero_matrix()
        for g, c in x.terms.items():
            m, word = g.reduced_word()
            mat = linalg.identity(self.dim, LaurentPoly.zero(), LaurentPoly.one())
            rho = self._rho_matrix(1 if m >= 0 else -1)
            for _ in range(abs(m)):
                mat = linalg.mat_mul(mat, rho, LaurentPoly.zero())
            for i in word:
                mat = linalg.mat_mul(mat, self._t_matrix(i), LaurentPoly.zero())
            total = linalg.mat_add(total, linalg.mat_scale(mat, c))
        return total

    def _t_matrix(self, i: int):
        b = self._gen_matrix(i)
        q = LaurentPoly.q()
        return [
            [b[r][c] - q if r == c else b[r][c] for c in range(self.dim)]
            for r in range(self.dim)
        ]


class CellModule(_MatrixModule):
    """The cell module of the extended affine Hecke algebra, basis m_0..m_{d-1}."""

    def __init__(self, d: int, z, lam):
        super().__init__(d, d)
        self.z = _mono(z)
        self.lam = _mono(lam)

    def _gen_matrix(self, i: int):
        """Action matrix of b_i, 0 <= i <= d-1."""
        d = self.d
        mat = self.zero_matrix()
        two = LaurentPoly.quantum_int(2)
        for j in range(d):
            if j == i:
                mat[i][j] = mat[i][j] + two
            elif i == 1 and j == 0:
                mat[1][j] = mat[1][j] + self.z
            elif i == 0 and j == 1:
                mat[0][j] = mat[0][j] + self.z ** (-1)
            elif (i - j) % d in (1, d - 1):
                mat[i][j] = mat[i][j] + LaurentPoly.one()
        return mat

    def _rho_matrix(self, sign: int = 1):
        d = self.d
        mat = self.zero_matrix()
        for j in range(d):
            c = self.lam * (self.z if j == 0 else LaurentPoly.one())
            if sign > 0:
                mat[(j + 1) % d][j] = c
            else:
                mat[j][(j + 1) % d] = c ** (-1)
        return mat

    def gram_matrix(self):
        """Gram matrix G[i][j] = <m_i, m_j> of the bilinear form."""
        d = self.d
        g = self.zero_matrix()
        two = LaurentPoly.quantum_int(2)
        for i in range(d):
            for j in range(d):
                if i == j:
                    g[i][j] = two
                elif i == 0 and j == 1:
                    g[i][j] = self.z
                elif i == 1 and j == 0:
                    g[i][j] = self.z ** (-1)
                elif (i - j) % d in (1, d - 1):
                    g[i][j] = LaurentPoly.one()
        return g

    def gram_rank(self) -> int:
        lifted = [[RationalFunction(e) for e in row] for row in self.gram_matrix()]
        return linalg.rank(lifted)

    def radical_basis(self):
        """Basis of {m : <m, -> = 0}, as coordinate vectors over Q(q)."""
        g = self.gram_matrix()
        rows = [
            [RationalFunction(g[i][j]) for i in range(self.d)] for j in range(self.d)
        ]
        return linalg.nullspace(rows, RationalFunction.zero(), RationalFunction.one())

    def singular_vector(self, sign: int):
        """n_pm = sum_{k=1}^d (-q)^{-+k} m_k as a coordinate vector."""
        vec = [LaurentPoly.zero()] * self.d
        for k in range(1, self.d + 1):
            vec[k % self.d] = vec[k % self.d] + minus_q_power(-sign * k)
        return vec


class SimpleQuotient(_MatrixModule):
    """L^pm: the quotient of the cell module at z = (-q)^{pm d} by n_pm.

    The basis is the image of m_1, ..., m_{d-1}; the class of m_0 is
    -sum_k (-q)^{pm k} mbar_{d-k}.
    """

    def __init__(self, d: int, lam, sign: int):
        super().__init__(d, d - 1)
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        self.sign = sign
        self.lam = _mono(lam)
        z = minus_q_power(sign * d)
        self.parent = CellModule(d, z, self.lam ** sign)

    def _m0_expansion(self):
        """Coordinates of mbar_0 in the basis mbar_1..mbar_{d-1}."""
        coords = [LaurentPoly.zero()] * (self.dim)
        for k in range(1, self.d):
            coords[self.d - k - 1] = -minus_q_power(self.sign * k)
        return coords

    def _quotient(self, mat):
        """Push a parent action matrix down to the quotient basis."""
        m0 = self._m0_expansion()
        out = self.zero_matrix()
        for j in range(1, self.d):
            for i in range(self.d):
                c = mat[i][j]
                if c.is_zero():
                    continue
                if i == 0:
                    for r in range(self.dim):
                        out[r][j - 1] = out[r][j - 1] + c * m0[r]
                else:
                    out[i - 1][j - 1] = out[i - 1][j - 1] + c
        return out

    def _gen_matrix(self, i: int):
        return self._quotient(self.parent._gen_matrix(i))

    def _rho_matrix(self, sign: int = 1):
        mat = self._quotient(self.parent._rho_matrix(1))
        if sign > 0:
            return mat
        lifted = [[RationalFunction(e) for e in row] for row in mat]
        inv = linalg.invert(lifted, RationalFunction.zero(), RationalFunction.one())
        return [[e.to_laurent() for e in row] for row in inv]


class EvaluationModule(_MatrixModule):
    """The pull-back of the simple H_d-module M_d along ev_a or ev'_a."""

    def __init__(self, d: int, a, prime: bool = False):
        super().__init__(d, d - 1)
        self.a = _mono(a)
        self.prime = prime

    def _gen_matrix(self, i: int):
        """Action matrix of b_i.  For i = 0 this uses b_0 = rho^-1 b_1 rho."""
        if i == 0:
            rho = self._rho_matrix(1)
            rho_inv = self._rho_matrix(-1)
            b1 = linalg.mat_mul(
                linalg.mat_mul(rho_inv, self._gen_matrix(1), LaurentPoly.zero()),
                rho,
                LaurentPoly.zero(),
            )
            return b1
        mat = self.zero_matrix()
        two = LaurentPoly.quantum_int(2)
        for j in range(1, self.d):
            if j == i:
                mat[i - 1][j - 1] = two
            elif abs(j - i) == 1:
                mat[i - 1][j - 1] = LaurentPoly.one()
        return mat

    def _rho_matrix(self, sign: int = 1):
        d, a = self.d, self.a
        mat = self.zero_matrix()
        e = d - 2 if self.prime else 2 - d
        for j in range(1, d - 1):
            mat[j][j - 1] = a * minus_q_power(e)
        last = (
            a * LaurentPoly.monomial(-1) if self.prime else a * LaurentPoly.q()
        )
        for k in range(1, d):
            power = k - 1 if self.prime else 1 - k
            mat[k - 1][d - 2] = last * minus_q_power(power)
        if sign > 0:
            return mat
        lifted = [[RationalFunction(x) for x in row] for row in mat]
        inv = linalg.invert(lifted, RationalFunction.zero(), RationalFunction.one())
        return [[x.to_laurent() for x in row] for row in inv]


def iso_to_simple_quotient(d: int, lam, sign: int):
    """Check that L^pm_{d,lam} equals the matching evaluation module.

    Returns (quotient, eval_module); the identity on coordinates intertwines
    the two actions, which is verified generator by generator.
    """
    lam = _mono(lam)
    quot = SimpleQuotient(d, lam, sign)
    if sign > 0:
        a = lam * minus_q_power(d - 2)
        emod = EvaluationModule(d, a, prime=False)
    else:
        a = lam ** (-1) * minus_q_power(2 - d)
        emod = EvaluationModule(d, a, prime=True)
    for i in range(d):
        if not linalg.mat_eq(quot._gen_matrix(i), emod._gen_matrix(i)):
            raise AssertionError(f"b_{i} actions disagree for d={d}, sign={sign}")
    if not linalg.mat_eq(quot._rho_matrix(1), emod._rho_matrix(1)):
        raise AssertionError(f"rho actions disagree for d={d}, sign={sign}")
    return quot, emod


def radical_suite(d: int, z=None, lam=None) -> list[dict]:
    """Gram-form checks for one parameter z, or a standard sweep if z is None.

    Each report is {"id": str, "pass": bool} plus an optional "note".  The
    rank drops (and the radical becomes the line spanned by the matching
    singular vector) exactly at z = (-q)^{+-d}.
    """
    lam = _mono(1 if lam is None else lam)
    if z is not None:
        zs = [_mono(z)]
    else:
        zs = [
            minus_q_power(d),
            minus_q_power(-d),
            LaurentPoly.q(),
            LaurentPoly.q() ** 2,
            LaurentPoly.one(),
        ]
    out = []

    def report(name, ok, note=""):
        rep = {"id": name, "pass": bool(ok)}
        if note:
            rep["note"] = note
        out.append(rep)

    zero = LaurentPoly.zero()
    for z in zs:
        tag = f"[d={d},z={z!r}]"
        sign = 0
        if z == minus_q_power(d):
            sign = 1
        elif z == minus_q_power(-d):
            sign = -1
        mod = CellModule(d, z, lam)
        rank = mod.gram_rank()
        rad = mod.radical_basis()
        want_rank = d - 1 if sign else d
        report(f"cell-gram-rank{tag}", rank == want_rank,
               note=f"rank {rank}, expected {want_rank}")
        report(f"cell-radical-dim{tag}", len(rad) == d - want_rank,
               note=f"radical dimension {len(rad)}")
        if not sign:
            continue
        n = mod.singular_vector(sign)
        ok = all(
            all(c.is_zero() for c in linalg.mat_vec(mod._gen_matrix(i), n, zero))
            for i in range(d)
        )
        report(f"cell-singular-annihilated{tag}", ok)
        got = linalg.mat_vec(mod._rho_matrix(1), n, zero)
        eig = lam * minus_q_power(sign)
        report(f"cell-singular-rho-eigenvalue{tag}",
               all((got[i] - eig * n[i]).is_zero() for i in range(d)))
    return out
