"""Birepresentation verification suites on zigzag projectives.

This module assembles the two concrete module-category actions used
throughout:

  * the finite action on Z_d-projectives (colors 1..d-1), with B_i acting as
    the projective bimodule functor P(i) and the dot/trivalent 2-morphism
    images realized in `relations`;
  * the affine action on hat-Z_d-projectives (colors 0..d-1 plus the
    rotation), realized by the word modules in `bimod` and verified by the
    relation suites in `relations`;
  * the triangulated action on complexes via Rouquier complexes and the
    rotation complex, realized in `homotopy`.

On top of these it builds the distinguished complexes X_0, ..., X_{d-1}
(the staircase complex and the generators), and machine-verifies:

  * stability of add{X_0 .. X_{d-1}} under all generators, with explicit
    minimal models (verify_prop_invariant);
  * the endomorphism algebra of X_0 + ... + X_{d-1} in the homotopy
    category: dimension 4d, quiver shape, and the full multiplication
    table of the affine zigzag algebra, including the sign relation at the
    affine vertex with an explicit null-homotopy witness
    (verify_end_algebra);
  * that the action decategorifies to the extended cell module at
    z = (-q)^d and lambda = (-1)^(s-(2-d)) q^(r-(d-2))
    (verify_decategorification);
  * Hom-dimension evidence that the cover embedding is not full
    (hom_dimension_evidence_nonfullness);
  * compatibility of the complex-level action with the affine word-module
    action under the vertex dictionary e_i <-> X_i
    (verify_phi_compatibility);
  * the object-level Rouquier lemmas: inverses, braid relation, the two
    conjugation lemmas, the snake relations with explicit homotopies, and
    agreement of the two constructions of the rotation complex
    (rouquier_lemma_suite).
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .cellmods import CellModule, minus_q_power
from .homotopy import (
    Complex,
    HomSpace,
    apply_rouquier,
    check_chainmap,
    check_nullhomotopy,
    compose_chainmaps,
    ev_trho,
    ev_trho_inverse,
    identity_chainmap,
    iso_test,
    scale_chainmap,
    sub_chainmaps,
    verify_snake_relations,
)
from .projcat import ModMorphism, ProjObject
from .scalars import LaurentPoly
from .zigzag import ZigzagAlgebra, affine_zigzag, finite_zigzag


def _report(name: str, ok: bool, note: str = "") -> dict:
    out = {"id": name, "pass": bool(ok)}
    if note:
        out["note"] = note
    return out


# -- the distinguished complexes ------------------------------------------------


def build_X_objects(d: int) -> dict[int, Complex]:
    """X_0 (the staircase complex) and X_i = Ze_i, over the finite zigzag.

    X_0 has term Ze_{d-1-k}<k+1> in homological degree k (k = 0..d-2), with
    differential right multiplication by the arrow (d-1-k)|(d-2-k).
    """
    A = finite_zigzag(d)
    xs = {i: Complex.generator(A, i) for i in range(1, d)}
    terms = {
        k: ProjObject.generator(A, d - 1 - k, k + 1) for k in range(d - 1)
    }
    diffs = {}
    for k in range(d - 2):
        f = ModMorphism.zero(terms[k], terms[k + 1])
        f.entries[0][0] = A.arrow(d - 1 - k, d - 2 - k)
        diffs[k] = f
    xs[0] = Complex(A, terms, diffs, validate=True)
    return xs


def _iso(C: Complex, D: Complex, seed: int = 0) -> bool:
    return iso_test(C.minimize(), D.minimize(), seed=seed) is not None


def _find_global_shift(M: Complex, X: Complex, seed: int = 0):
    """(x, y) with M isomorphic to X<x>[y] in the homotopy category, or None."""
    M = M.minimize()
    X = X.minimize()
    if M.is_zero() or X.is_zero():
        return None
    y = min(X.support()) - min(M.support())
    x = M.term(min(M.support())).summands[0][1] - X.term(min(X.support())).summands[0][1]
    if iso_test(M, X.shift(x, y), seed=seed) is not None:
        return (x, y)
    return None


# -- stability of the X-subcategory ---------------------------------------------


def verify_prop_invariant(d: int, r: int | None = None, s: int | None = None,
                          seed: int = 0) -> list[dict]:
    """Stability of add{X_0..X_{d-1}} under B_1..B_{d-1} and the rotation."""
    if r is None:
        r = d - 2
    if s is None:
        s = 2 - d
    dt, ds = r - (d - 2), s - (2 - d)
    X = build_X_objects(d)
    out = []
    for i in range(2, d - 1):
        out.append(_report(
            f"B[{i}](X0)-contractible[d={d}]",
            X[0].apply_p(i).minimize().is_zero(),
        ))
    out.append(_report(
        f"B[1](X0)=X1<d>[2-d][d={d}]",
        _iso(X[0].apply_p(1), X[1].shift(d, 2 - d), seed),
    ))
    out.append(_report(
        f"B[{d-1}](X0)=X{d-1}[d={d}]",
        _iso(X[0].apply_p(d - 1), X[d - 1], seed),
    ))
    for a in range(d):
        img = ev_trho(X[a], r, s)
        if a == 0:
            want = X[1].shift(d + dt, (2 - d) + ds)
        else:
            want = X[(a + 1) % d].shift(dt, ds)
        out.append(_report(
            f"Trho(X{a})-orbit[d={d},r={r},s={s}]", _iso(img, want, seed)
        ))
        back = ev_trho_inverse(ev_trho(X[a], r, s), r, s)
        out.append(_report(
            f"Trho-roundtrip(X{a})[d={d},r={r},s={s}]", _iso(back, X[a], seed)
        ))
    # d-fold rotation acts as a single global bigraded shift
    expect = (d + d * dt, (2 - d) + d * ds)
    shifts = []
    for a in range(d):
        cur = X[a]
        for _ in range(d):
            cur = ev_trho(cur, r, s).minimize()
        shifts.append(_find_global_shift(cur, X[a], seed))
    out.append(_report(
        f"Trho^d=Id<{expect[0]}>[{expect[1]}][d={d},r={r},s={s}]",
        all(sh == expect for sh in shifts),
        note=f"observed shifts {shifts}",
    ))
    return sorted(out, key=lambda rep: rep["id"])


# -- the endomorphism algebra ----------------------------------------------------


def _generator_chainmaps(d: int, X: dict[int, Complex]):
    """Explicit chain maps realizing the quiver arrows and loops.

    Returns {(a, b): (comps, t, n)} for the arrow a -> b of the affine zigzag
    quiver, plus ("loop", a) for the loop at a and ("id", a) for e_a.
    """
    A = X[1].algebra
    gens = {}
    for a in range(d):
        gens[("id", a)] = (identity_chainmap(X[a]), 0, 0)
    for a in range(1, d):
        comps = {n: ModMorphism.zero(X[a].term(n), X[a].term(n), 2)
                 for n in X[a].support()}
        comps[0].entries[0][0] = A.loop(a)
        gens[("loop", a)] = (comps, 2, 0)
    for a in range(1, d):
        for b in (a - 1, a + 1):
            if not (1 <= b <= d - 1):
                continue
            f = ModMorphism.zero(X[a].term(0), X[b].term(0), 1)
            f.entries[0][0] = A.arrow(a, b)
            gens[(a, b)] = ({0: f}, 1, 0)
    # p_{d-1}: X_0 -> X_{d-1}, projection onto the degree-0 term
    f = ModMorphism.zero(X[0].term(0), X[d - 1].term(0), 1)
    f.entries[0][0] = A.e(d - 1)
    gens[(0, d - 1)] = ({0: f}, 1, 0)
    # j_{d-1}: X_{d-1} -> X_0, multiplication by the loop at d-1
    f = ModMorphism.zero(X[d - 1].term(0), X[0].term(0), 1)
    f.entries[0][0] = A.loop(d - 1)
    gens[(d - 1, 0)] = ({0: f}, 1, 0)
    # j_1: X_1 -> X_0, inclusion of the top term (bidegree (1-d, d-2))
    f = ModMorphism.zero(X[1].term(0), X[0].term(d - 2), 1 - d)
    f.entries[0][0] = A.e(1)
    gens[(1, 0)] = ({0: f}, 1 - d, d - 2)
    # p_1: X_0 -> X_1, multiplication by the loop at 1 (bidegree (d+1, 2-d))
    f = ModMorphism.zero(X[0].term(d - 2), X[1].term(0), d + 1)
    f.entries[0][0] = A.loop(1)
    gens[(0, 1)] = ({d - 2: f}, d + 1, 2 - d)
    # the loop at 0: j_1 o p_1
    p1, t1, n1 = gens[(0, 1)]
    j1, t2, n2 = gens[(1, 0)]
    gens[("loop", 0)] = (compose_chainmaps(j1, p1, n1), t1 + t2, n1 + n2)
    return gens


def _hom_dim_sweep(d: int, X: dict[int, Complex]):
    """dims[(a, b)][(t, n)] = dim of the hom classes X_a -> X_b there."""
    dims: dict[tuple, dict[tuple, int]] = {}
    nspan = range(-(d - 1), d)
    tspan = range(-(d + 2), d + 3)
    for a in range(d):
        for b in range(d):
            per = {}
            for n in nspan:
                for t in tspan:
                    dim = HomSpace(X[a], X[b], t, n).dim
                    if dim:
                        per[(t, n)] = dim
            dims[(a, b)] = per
    return dims


def verify_end_algebra(d: int, seed: int = 0) -> list[dict]:
    """The homotopy-category endomorphism algebra of X_0 + ... + X_{d-1}.

    Checks the total dimension 4d, the quiver shape, the bidegrees of the
    explicit generators, and the full multiplication table against the
    affine zigzag algebra (as ungraded algebras), including the sign
    relation at the affine vertex with an explicit null-homotopy witness.
    """
    X = build_X_objects(d)
    Ah = affine_zigzag(d)
    out = []
    dims = _hom_dim_sweep(d, X)
    total = sum(sum(per.values()) for per in dims.values())
    out.append(_report(f"end-dimension-4d[d={d}]", total == 4 * d,
                       note=f"total {total}"))
    quiver_ok = True
    for (a, b), per in dims.items():
        tot = sum(per.values())
        want = 2 if a == b else (1 if (a - b) % d in (1, d - 1) else 0)
        if tot != want:
            quiver_ok = False
    out.append(_report(f"end-quiver-shape[d={d}]", quiver_ok))

    gens = _generator_chainmaps(d, X)
    # generator bidegrees and nonvanishing
    expected_bidegrees = {
        (0, d - 1): (1, 0), (d - 1, 0): (1, 0),
        (1, 0): (1 - d, d - 2), (0, 1): (d + 1, 2 - d),
    }
    for a in range(1, d):
        for b in (a - 1, a + 1):
            if 1 <= b <= d - 1:
                expected_bidegrees[(a, b)] = (1, 0)
    bid_ok, nonzero_ok = True, True
    for key, want in expected_bidegrees.items():
        comps, t, n = gens[key]
        if (t, n) != want:
            bid_ok = False
        a, b = key
        H = HomSpace(X[a], X[b], t, n)
        if not check_chainmap(X[a], X[b], comps, n):
            nonzero_ok = False
        elif all(x == 0 for x in H.express(comps)):
            nonzero_ok = False
    out.append(_report(f"end-generator-bidegrees[d={d}]", bid_ok))
    out.append(_report(f"end-generators-nonzero[d={d}]", nonzero_ok))

    # dictionary: quiver arrow/loop/idempotent -> affine zigzag basis element
    def basis_of(key):
        if key[0] == "id":
            return ("e", key[1])
        if key[0] == "loop":
            return next(b for b in Ah.basis if b[0] == "l"
                        and Ah.source(b) == key[1])
        a, b = key
        return next(bb for bb in Ah.basis if bb[0] == "a"
                    and Ah.source(bb) == a and Ah.target(bb) == b)

    src = {key: (key[1] if key[0] in ("id", "loop") else key[0])
           for key in gens}
    tgt = {key: (key[1] if key[0] in ("id", "loop") else key[1])
           for key in gens}

    # probe whether composing rep(key1) then rep(key2) matches the algebra
    # product elt(key2) * elt(key1) or the opposite order: going 1 -> 2 -> 1
    # must give the loop at vertex 1
    ar12 = Ah.element(basis_of((1, 2)))
    ar21 = Ah.element(basis_of((2, 1)))
    loop1 = Ah.element(basis_of(("loop", 1)))
    second_times_first = (ar21 * ar12) == loop1

    elt_to_key = {}
    for key in gens:
        elt_to_key[Ah.index[basis_of(key)]] = key

    table_ok = True
    failures = []
    for key1, (f1, t1, n1) in gens.items():
        for key2, (f2, t2, n2) in gens.items():
            if tgt[key1] != src[key2]:
                continue
            comp = compose_chainmaps(f2, f1, n1)
            a, b = src[key1], tgt[key2]
            H = HomSpace(X[a], X[b], t1 + t2, n1 + n2)
            e1, e2 = Ah.element(basis_of(key1)), Ah.element(basis_of(key2))
            prod = e2 * e1 if second_times_first else e1 * e2
            want = [Fraction(0)] * H.dim
            ok = True
            for bk, coeff in prod.coeffs.items():
                key = elt_to_key.get(bk)
                if key is None:
                    ok = False
                    break
                g, tg, ng = gens[key]
                if (tg, ng) != (t1 + t2, n1 + n2):
                    ok = False
                    break
                gv = H.express(g)
                want = [w + coeff * x for w, x in zip(want, gv)]
            if ok:
                got = H.express(comp)
                ok = got == want
            if not ok:
                table_ok = False
                failures.append(f"{key1}*{key2}")
    out.append(_report(
        f"end-multiplication-table[d={d}]", table_ok,
        note="" if table_ok else "failing products: " + ", ".join(failures)
    ))

    # the sign relation at the affine vertex, with explicit witness
    p1, pt, pn = gens[(0, 1)]
    j1, jt, jn = gens[(1, 0)]
    pd, _, _ = gens[(0, d - 1)]
    jd, _, _ = gens[(d - 1, 0)]
    left = compose_chainmaps(j1, p1, pn)
    right = compose_chainmaps(jd, pd, 0)
    defect = sub_chainmaps(left, scale_chainmap(right, Fraction((-1) ** d)))
    H0 = HomSpace(X[0], X[0], 2, 0)
    h = H0.homotopy_witness(defect)
    ok = h is not None and check_nullhomotopy(X[0], X[0], defect, h, 0)
    out.append(_report(f"end-affine-sign-relation[d={d}]", ok))
    return sorted(out, key=lambda rep: rep["id"])


# -- decategorification -----------------------------------------------------------


def _x_class_vectors(d: int, X: dict[int, Complex]):
    return {a: X[a].decat() for a in range(d)}


def _vec_eq(u: dict, v: dict) -> bool:
    keys = set(u) | set(v)
    z = LaurentPoly.zero()
    return all(u.get(k, z) == v.get(k, z) for k in keys)


def _vec_comb(mat_col, xvecs, d):
    out: dict[int, LaurentPoly] = {}
    for b in range(d):
        c = mat_col[b]
        if c.is_zero():
            continue
        for v, p in xvecs[b].items():
            out[v] = out.get(v, LaurentPoly.zero()) + c * p
    return {v: p for v, p in out.items() if not p.is_zero()}


def verify_decategorification(d: int, r: int | None = None,
                              s: int | None = None) -> list[dict]:
    """Generator action on the classes [X_a] vs the extended cell module.

    The comparison is at z = (-q)^d and lambda = (-1)^(s-(2-d)) q^(r-(d-2)),
    with [X_a] = m_a for a >= 1 and [X_0] the alternating staircase class.
    """
    if r is None:
        r = d - 2
    if s is None:
        s = 2 - d
    lam = LaurentPoly.monomial(r - (d - 2), (-1) ** ((s - (2 - d)) % 2))
    cell = CellModule(d, minus_q_power(d), lam)
    X = build_X_objects(d)
    xvecs = _x_class_vectors(d, X)
    out = []
    for i in range(1, d):
        mat = cell._gen_matrix(i)
        ok = True
        for a in range(d):
            got = X[a].apply_p(i).decat()
            want = _vec_comb([mat[b][a] for b in range(d)], xvecs, d)
            if not _vec_eq(got, want):
                ok = False
        out.append(_report(f"decat-b[{i}][d={d},r={r},s={s}]", ok))
    rho = cell._rho_matrix(1)
    ok = True
    for a in range(d):
        got = ev_trho(X[a], r, s).decat()
        want = _vec_comb([rho[b][a] for b in range(d)], xvecs, d)
        if not _vec_eq(got, want):
            ok = False
    out.append(_report(f"decat-rho[d={d},r={r},s={s}]", ok))
    # b_0 acts as the rotation conjugate of b_{d-1}
    mat0 = cell._gen_matrix(0)
    ok = True
    for a in range(d):
        img = ev_trho_inverse(X[a], r, s).apply_p(d - 1)
        got = ev_trho(img, r, s).decat()
        want = _vec_comb([mat0[b][a] for b in range(d)], xvecs, d)
        if not _vec_eq(got, want):
            ok = False
    out.append(_report(f"decat-b[0][d={d},r={r},s={s}]", ok))
    return sorted(out, key=lambda rep: rep["id"])


# -- Hom-dimension evidence of non-fullness ---------------------------------------


def hom_dimension_evidence_nonfullness(d: int) -> list[dict]:
    """Hom classes between X_0 and the X_i: only the four quiver arrows exist.

    The degree-(0,0) content of each graded piece matches the asserted
    pattern: maps X_0 -> X_{d-1} in bidegree (1,0), X_0 -> X_1 in
    (d+1, 2-d), X_1 -> X_0 in (1-d, d-2), X_{d-1} -> X_0 in (1, 0), and
    nothing else between X_0 and any X_i.
    """
    X = build_X_objects(d)
    dims = _hom_dim_sweep(d, X)
    expected_out = {1: {(d + 1, 2 - d): 1}, d - 1: {(1, 0): 1}}
    expected_in = {1: {(1 - d, d - 2): 1}, d - 1: {(1, 0): 1}}
    out = []
    for i in range(1, d):
        got_out = dims[(0, i)]
        got_in = dims[(i, 0)]
        out.append(_report(
            f"hom-evidence-X0-to-X{i}[d={d}]",
            got_out == expected_out.get(i, {}),
            note=f"observed {sorted(got_out.items())}",
        ))
        out.append(_report(
            f"hom-evidence-X{i}-to-X0[d={d}]",
            got_in == expected_in.get(i, {}),
            note=f"observed {sorted(got_in.items())}",
        ))
    return sorted(out, key=lambda rep: rep["id"])


# -- compatibility with the affine word-module action ------------------------------


def _affine_path_bidegree(Ah: ZigzagAlgebra, b: tuple, d: int):
    """Observed bidegree of a path in the endomorphism-algebra bigrading.

    Arrows between vertices 0 and 1 carry the twisted bidegrees observed in
    the endomorphism algebra; everything else matches the path degree.
    """
    if b[0] == "a":
        a, t = Ah.source(b), Ah.target(b)
        if {a, t} == {0, 1}:
            return (1 - d, d - 2) if (a, t) == (1, 0) else (d + 1, 2 - d)
        return (1, 0)
    return (Ah.degree(b), 0)


def verify_phi_compatibility(d: int, r: int | None = None,
                             s: int | None = None, seed: int = 0) -> list[dict]:
    """Complex-level generator action vs the affine projective action.

    For each generator G and each vertex i, the minimal model of G acting on
    X_i is isomorphic to the direct sum predicted by the affine zigzag
    algebra under the dictionary e_j <-> X_j, with the twisted bidegrees on
    the 0-1 arrows (and the matching extra shift for the rotation through
    the affine vertex).
    """
    if r is None:
        r = d - 2
    if s is None:
        s = 2 - d
    dt, ds = r - (d - 2), s - (2 - d)
    X = build_X_objects(d)
    A = X[1].algebra
    Ah = affine_zigzag(d)
    out = []

    def expected_sum(pieces):
        total = Complex.zero(A)
        for (j, t, n) in pieces:
            total = total.direct_sum(X[j].shift(t, n))
        return total

    for j in range(d):
        ok = True
        notes = []
        for i in range(d):
            pieces = []
            for b in Ah.hom_basis(i, j):
                t, n = _affine_path_bidegree(Ah, b, d)
                pieces.append((j, 1 - t, -n))
            want = expected_sum(pieces)
            if j == 0:
                img = ev_trho(ev_trho_inverse(X[i], r, s).apply_p(d - 1), r, s)
            else:
                img = X[i].apply_p(j)
            if not _iso(img, want, seed):
                ok = False
                notes.append(f"i={i}")
        out.append(_report(
            f"phi-compat-B[{j}][d={d},r={r},s={s}]", ok,
            note="" if ok else "mismatch at " + ", ".join(notes),
        ))
    ok = True
    notes = []
    for i in range(d):
        extra_t, extra_n = (d, 2 - d) if i == 0 else (0, 0)
        want = X[(i + 1) % d].shift(dt + extra_t, ds + extra_n)
        if not _iso(ev_trho(X[i], r, s), want, seed):
            ok = False
            notes.append(f"i={i}")
    out.append(_report(
        f"phi-compat-rho[d={d},r={r},s={s}]", ok,
        note="" if ok else "mismatch at " + ", ".join(notes),
    ))
    return sorted(out, key=lambda rep: rep["id"])


# -- object-level Rouquier lemmas ---------------------------------------------------


def rouquier_lemma_suite(d: int, seed: int = 0) -> list[dict]:
    """Inverses, braid relation, conjugation lemmas, snakes, rotation routes."""
    A = finite_zigzag(d)
    out = []
    gens = {j: Complex.generator(A, j) for j in range(1, d)}
    for j, C in gens.items():
        for i in range(1, d):
            out.append(_report(
                f"rouquier-inverse[T{i}T{i}^-1,j={j},d={d}]",
                _iso(apply_rouquier(apply_rouquier(C, i, -1), i, 1), C, seed),
            ))
            out.append(_report(
                f"rouquier-inverse[T{i}^-1T{i},j={j},d={d}]",
                _iso(apply_rouquier(apply_rouquier(C, i, 1), i, -1), C, seed),
            ))
        for i in range(1, d - 1):
            lhs = apply_rouquier(apply_rouquier(apply_rouquier(C, i, 1), i + 1, 1), i, 1)
            rhs = apply_rouquier(apply_rouquier(apply_rouquier(C, i + 1, 1), i, 1), i + 1, 1)
            out.append(_report(
                f"rouquier-braid[i={i},j={j},d={d}]", _iso(lhs, rhs, seed)
            ))
            # T_{i+1}^-1 B_i T_{i+1} = T_i B_{i+1} T_i^-1 on objects
            lhs = apply_rouquier(apply_rouquier(C, i + 1, 1).apply_p(i), i + 1, -1)
            rhs = apply_rouquier(apply_rouquier(C, i, -1).apply_p(i + 1), i, 1)
            out.append(_report(
                f"rouquier-conj-BT[i={i},j={j},d={d}]", _iso(lhs, rhs, seed)
            ))
            lhs = apply_rouquier(apply_rouquier(C, i + 1, -1).apply_p(i), i + 1, 1)
            rhs = apply_rouquier(apply_rouquier(C, i, 1).apply_p(i + 1), i, -1)
            out.append(_report(
                f"rouquier-conj-TB[i={i},j={j},d={d}]", _iso(lhs, rhs, seed)
            ))
        for i in range(2, d - 1):
            # T_i^-1 T_{i-1}^-1 B_i = B_{i-1} T_i^-1 T_{i-1}^-1 on objects
            lhs = apply_rouquier(apply_rouquier(C.apply_p(i), i - 1, -1), i, -1)
            rhs = apply_rouquier(apply_rouquier(C, i - 1, -1), i, -1).apply_p(i - 1)
            out.append(_report(
                f"rouquier-slide-TTB[i={i},j={j},d={d}]", _iso(lhs, rhs, seed)
            ))
        for i in range(1, d):
            for name, ok in verify_snake_relations(C, i, seed):
                out.append(_report(f"rouquier-{name}[j={j},d={d}]", ok))
        out.append(_report(
            f"rouquier-trho-routes[j={j},d={d}]",
            _iso(ev_trho(C, route="tensor"), ev_trho(C, route="closed"), seed),
        ))
    return sorted(out, key=lambda rep: rep["id"])
