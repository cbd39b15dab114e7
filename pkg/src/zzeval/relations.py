"""Defining relations of the diagrammatic 2-categories, checked on bimodules.

Every check evaluates both sides of a relation as explicit matrices between
word-module realizations (see bimod) and compares them exactly.  Colored
4-valent crossings and 6-valent vertices are sent to zero, so relations in
which one side consists of diagrams containing such a vertex reduce to
verifying that the other side also vanishes (or equals the stated remainder).

`finite_suite(d)` checks the relations for colors 1..d-1 over the finite
zigzag algebra; `affine_suite(d)` checks all colors mod d over the affine
algebra together with the oriented-strand relations.
"""

from __future__ import annotations

from fractions import Fraction

from .bimod import (
    BimoduleMap,
    WordModule,
    box_cap,
    box_crossing,
    box_crossing_back,
    box_cup,
    box_dotdown,
    box_merge,
    box_split,
    box_updot,
    dumbbell_at,
    word_module,
)
from .zigzag import ZigzagAlgebra, affine_zigzag, finite_zigzag


def box_fourvertex(W: WordModule, pos: int) -> BimoduleMap:
    """Crossing of distant colors at atom positions pos, pos+1 (sent to zero)."""
    a, b = W.atoms[pos], W.atoms[pos + 1]
    assert a[0] == "B" and b[0] == "B"
    atoms = W.atoms[:pos] + (b, a) + W.atoms[pos + 2:]
    return BimoduleMap.zero(W, word_module(W.algebra, atoms), 0)


def box_sixvertex(W: WordModule, pos: int) -> BimoduleMap:
    """The 6-valent vertex B_iB_jB_i -> B_jB_iB_j at pos (sent to zero)."""
    a, b, c = W.atoms[pos], W.atoms[pos + 1], W.atoms[pos + 2]
    assert a == c and a[0] == "B" and b[0] == "B"
    atoms = W.atoms[:pos] + (b, a, b) + W.atoms[pos + 3:]
    return BimoduleMap.zero(W, word_module(W.algebra, atoms), 0)


def _report(name: str, ok: bool, note: str = "") -> dict:
    rep = {"id": name, "pass": bool(ok)}
    if note:
        rep["note"] = note
    return rep


def _adjacent_pairs(A: ZigzagAlgebra) -> list[tuple[int, int]]:
    out = []
    for i in A.vertices:
        for j in A.vertices:
            if i == j:
                continue
            if A.affine:
                if (i - j) % A.d in (1, A.d - 1):
                    out.append((i, j))
            elif abs(i - j) == 1:
                out.append((i, j))
    return out


def _distant_pairs(A: ZigzagAlgebra) -> list[tuple[int, int]]:
    adj = set(_adjacent_pairs(A))
    return [
        (i, j)
        for i in A.vertices
        for j in A.vertices
        if i != j and (i, j) not in adj
    ]


# -- one-color relations ------------------------------------------------------


def check_dot_split(A: ZigzagAlgebra, i: int) -> list[dict]:
    W1 = word_module(A, (("B", i),))
    sp = box_split(W1, 0)
    left = box_dotdown(sp.tgt, 0).compose(sp)
    right = box_dotdown(sp.tgt, 1).compose(sp)
    ident = BimoduleMap.identity(W1)
    return [
        _report(f"dot-after-split-left[i={i}]", left == ident),
        _report(f"dot-after-split-right[i={i}]", right == ident),
    ]


def check_frobenius(A: ZigzagAlgebra, i: int) -> list[dict]:
    W1 = word_module(A, (("B", i),))
    W2 = word_module(A, (("B", i), ("B", i)))
    merge = box_merge(W2, 0)
    mid = box_split(W1, 0).compose(merge)
    sp0 = box_split(W2, 0)
    left = box_merge(sp0.tgt, 1).compose(sp0)
    sp1 = box_split(W2, 1)
    right = box_merge(sp1.tgt, 0).compose(sp1)
    return [
        _report(f"frobenius-left[i={i}]", left == mid),
        _report(f"frobenius-right[i={i}]", right == mid),
    ]


def check_lollipop(A: ZigzagAlgebra, i: int) -> list[dict]:
    W1 = word_module(A, (("B", i),))
    sp = box_split(W1, 0)
    mg = box_merge(sp.tgt, 0)
    lhs = box_dotdown(W1, 0).compose(mg.compose(sp))
    return [_report(f"lollipop[i={i}]", lhs.is_zero())]


def check_dumbbell_sum(A: ZigzagAlgebra, i: int) -> list[dict]:
    W1 = word_module(A, (("B", i),))
    empty = word_module(A, ())
    lhs = dumbbell_at(W1, 0, i) + dumbbell_at(W1, 1, i)
    rhs = box_updot(empty, 0, i).compose(box_dotdown(W1, 0)).scale(2)
    return [_report(f"dumbbell-sum[i={i}]", lhs == rhs)]


# -- two-color relations ------------------------------------------------------


def check_sixvertex_dot(A: ZigzagAlgebra, i: int, j: int) -> list[dict]:
    """Two dots on a 6-valent vertex: the two resolution terms cancel."""
    Wjj = word_module(A, (("B", j), ("B", j)))
    empty = word_module(A, ())
    mg = box_merge(Wjj, 0)
    up0 = box_updot(mg.tgt, 0, i)
    term1 = box_updot(up0.tgt, 2, i).compose(up0.compose(mg))
    dd = box_dotdown(mg.tgt, 0).compose(mg)
    up = box_updot(empty, 0, i)
    sp = box_split(up.tgt, 0)
    term2 = box_updot(sp.tgt, 1, j).compose(sp.compose(up.compose(dd)))
    return [_report(f"sixvertex-dots[i={i},j={j}]", (term1 + term2).is_zero())]


def check_braidmove(A: ZigzagAlgebra, i: int, j: int) -> list[dict]:
    """Identity of B_iB_jB_i = (squared 6-vertex = 0) minus the dot term."""
    W3 = word_module(A, (("B", i), ("B", j), ("B", i)))
    six = box_sixvertex(W3, 0)
    diagram1 = box_sixvertex(six.tgt, 0).compose(six)
    dd = box_dotdown(W3, 1)
    mg = box_merge(dd.tgt, 0)
    sp = box_split(mg.tgt, 0)
    diagram2 = box_updot(sp.tgt, 1, j).compose(sp.compose(mg.compose(dd)))
    ok = BimoduleMap.identity(W3) == diagram1 - diagram2
    return [_report(f"braid-move[i={i},j={j}]", ok)]


def check_dumbbell_forcing(A: ZigzagAlgebra, a: int, b: int) -> list[dict]:
    """Adjacent-color dumbbell slides across a strand with a factor -1/2."""
    W = word_module(A, (("B", b),))
    lhs = dumbbell_at(W, 0, a) - dumbbell_at(W, 1, a)
    rhs = (dumbbell_at(W, 1, b) - dumbbell_at(W, 0, b)).scale(Fraction(1, 2))
    return [_report(f"dumbbell-forcing[a={a},b={b}]", lhs == rhs)]


def check_dumbbell_distant(A: ZigzagAlgebra, g: int, b: int) -> list[dict]:
    W = word_module(A, (("B", b),))
    ok = dumbbell_at(W, 0, g) == dumbbell_at(W, 1, g)
    return [_report(f"dumbbell-distant[g={g},b={b}]", ok)]


def check_distant_vanishing(A: ZigzagAlgebra, i: int, j: int) -> list[dict]:
    """Distant colors: B_iB_j = 0, so all crossing relations hold as 0 = 0."""
    W = word_module(A, (("B", i), ("B", j)))
    cross = box_fourvertex(W, 0)
    back = box_fourvertex(cross.tgt, 0).compose(cross)
    reports = [
        _report(f"distant-module-vanishes[i={i},j={j}]", W.dim == 0),
        _report(
            f"distant-reidemeister[i={i},j={j}]",
            back == BimoduleMap.identity(W),
            note="both sides are maps between zero modules",
        ),
    ]
    Wj = word_module(A, (("B", j),))
    up = box_updot(Wj, 0, i)
    lhs = box_fourvertex(up.tgt, 0).compose(up)
    rhs_tgt = word_module(A, (("B", j), ("B", i)))
    reports.append(
        _report(
            f"distant-dot-slide[i={i},j={j}]",
            lhs == BimoduleMap.zero(Wj, rhs_tgt, 1) and rhs_tgt.dim == 0,
            note="both sides land in a zero module",
        )
    )
    return reports


def check_sixvertex_zero(A: ZigzagAlgebra, i: int, j: int) -> list[dict]:
    """Relations whose two sides each contain a 6-valent vertex: both vanish."""
    W3 = word_module(A, (("B", i), ("B", j), ("B", i)))
    six = box_sixvertex(W3, 0)
    lhs = box_sixvertex(six.tgt, 0).compose(six)
    sp = box_split(W3, 0)
    rhs = box_sixvertex(sp.tgt, 1).compose(sp)
    return [
        _report(
            f"sixvertex-composites-vanish[i={i},j={j}]",
            lhs.is_zero() and rhs.is_zero(),
            note="all diagrams containing a 6-valent vertex map to zero",
        )
    ]


# -- oriented-strand relations (affine only) ----------------------------------


def check_oriented_loops(A: ZigzagAlgebra) -> list[dict]:
    empty = word_module(A, ())
    reports = []
    for k in (1, -1):
        cup = box_cup(empty, 0, k)
        loop = box_cap(cup.tgt, 0).compose(cup)
        reports.append(_report(f"oriented-loop[k={k}]", loop == BimoduleMap.identity(empty)))
        W = word_module(A, (("T", k), ("T", -k)))
        cap = box_cap(W, 0)
        zig = box_cup(cap.tgt, 0, k).compose(cap)
        reports.append(_report(f"oriented-zigzag[k={k}]", zig == BimoduleMap.identity(W)))
    return reports


def check_oriented_reidemeister(A: ZigzagAlgebra, i: int) -> list[dict]:
    reports = []
    for k in (1, -1):
        W = word_module(A, (("T", k), ("B", i)))
        cr = box_crossing(W, 0)
        ok1 = box_crossing_back(cr.tgt, 0).compose(cr) == BimoduleMap.identity(W)
        V = word_module(A, (("B", i), ("T", k)))
        cb = box_crossing_back(V, 0)
        ok2 = box_crossing(cb.tgt, 0).compose(cb) == BimoduleMap.identity(V)
        reports.append(_report(f"oriented-reidemeister[i={i},k={k}]", ok1 and ok2))
    return reports


def check_oriented_dot_slide_annihilation(A: ZigzagAlgebra, i: int) -> list[dict]:
    """A strand ending in a dot slides through a downward oriented strand.

    Word form: on T^{-1} B_i, first crossing to B_{i-1} T^{-1} then killing
    B_{i-1} equals killing B_i directly.  Holds exactly for the canonical
    crossing isomorphism.
    """
    W = word_module(A, (("T", -1), ("B", i)))
    cr = box_crossing(W, 0)
    lhs = box_dotdown(cr.tgt, 0).compose(cr)
    rhs = box_dotdown(W, 1)
    return [_report(f"oriented-dot-slide-annihilation[i={i}]", lhs == rhs)]


def check_oriented_dot_slide_creation(A: ZigzagAlgebra, i: int) -> list[dict]:
    """A strand born at a dot slides through a downward oriented strand.

    Word form: on T^{-1}, creating B_i on the right and crossing equals
    creating B_{i-1} on the left.  This variant requires the crossing to
    pick up a global sign -1, because the dot-creation element is
    *anti*-equivariant under the cyclic symmetry tau (its (-1)^i
    coefficients flip sign when all colors shift by one), whereas the
    annihilation and split maps are strictly equivariant.  Since the
    crossing image lives in a one-dimensional intertwiner space, no scalar
    normalization satisfies this variant together with the annihilation
    slide and the pitchfork slide; with the canonical normalization this
    check fails by the global sign.  See the decisions ledger.
    """
    d = A.d
    T = word_module(A, (("T", -1),))
    up_after = box_updot(T, 1, i)
    lhs = box_crossing(up_after.tgt, 0).compose(up_after)
    rhs = box_updot(T, 0, (i - 1) % d)
    ok = lhs == rhs
    note = None
    if not ok and (lhs + rhs).is_zero():
        note = (
            "fails by a global sign: the dot-creation element is "
            "anti-equivariant under the cyclic symmetry while the crossing "
            "is a scalar multiple of the equivariant twist map (see ledger)"
        )
    return [_report(f"oriented-dot-slide-creation[i={i}]", ok, note=note)]


def check_oriented_pitchfork(A: ZigzagAlgebra, i: int) -> list[dict]:
    """A split vertex slides through a downward oriented strand.

    Word form: on T^{-1} B_i, crossing then splitting B_{i-1} equals
    splitting B_i and crossing both legs.
    """
    W = word_module(A, (("T", -1), ("B", i)))
    cr = box_crossing(W, 0)
    lhs = box_split(cr.tgt, 0).compose(cr)
    sp = box_split(W, 1)
    c0 = box_crossing(sp.tgt, 0)
    rhs = box_crossing(c0.tgt, 1).compose(c0.compose(sp))
    return [_report(f"oriented-pitchfork[i={i}]", lhs == rhs)]


def check_oriented_zero_slides(A: ZigzagAlgebra) -> list[dict]:
    """4- and 6-valent vertices slide through a strand: both sides vanish."""
    reports = []
    for i, j in _distant_pairs(A):
        for k in (1, -1):
            W = word_module(A, (("T", k), ("B", i), ("B", j)))
            fv = box_fourvertex(W, 1)
            lhs = box_crossing(box_crossing(fv.tgt, 0).tgt, 1).compose(
                box_crossing(fv.tgt, 0).compose(fv)
            )
            c1 = box_crossing(W, 0)
            c2 = box_crossing(c1.tgt, 1)
            rhs = box_fourvertex(c2.tgt, 0).compose(c2.compose(c1))
            reports.append(
                _report(
                    f"oriented-fourvertex-slide[i={i},j={j},k={k}]",
                    lhs.is_zero() and rhs.is_zero() and lhs.tgt is rhs.tgt,
                    note="both sides contain a zero-assigned 4-valent vertex",
                )
            )
    for i, j in _adjacent_pairs(A):
        for k in (1, -1):
            W = word_module(A, (("T", k), ("B", i), ("B", j), ("B", i)))
            sv = box_sixvertex(W, 1)
            s1 = box_crossing(sv.tgt, 0)
            s2 = box_crossing(s1.tgt, 1)
            lhs = box_crossing(s2.tgt, 2).compose(s2.compose(s1.compose(sv)))
            c1 = box_crossing(W, 0)
            c2 = box_crossing(c1.tgt, 1)
            c3 = box_crossing(c2.tgt, 2)
            rhs = box_sixvertex(c3.tgt, 0).compose(c3.compose(c2.compose(c1)))
            reports.append(
                _report(
                    f"oriented-sixvertex-slide[i={i},j={j},k={k}]",
                    lhs.is_zero() and rhs.is_zero() and lhs.tgt is rhs.tgt,
                    note="both sides contain a zero-assigned 6-valent vertex",
                )
            )
    return reports


# -- suites --------------------------------------------------------------------


def _color_suite(A: ZigzagAlgebra) -> list[dict]:
    reports = []
    for i in A.vertices:
        reports += check_dot_split(A, i)
        reports += check_frobenius(A, i)
        reports += check_lollipop(A, i)
        reports += check_dumbbell_sum(A, i)
    for i, j in _adjacent_pairs(A):
        reports += check_sixvertex_dot(A, i, j)
        reports += check_braidmove(A, i, j)
        reports += check_dumbbell_forcing(A, i, j)
        reports += check_sixvertex_zero(A, i, j)
    for i, j in _distant_pairs(A):
        reports += check_distant_vanishing(A, i, j)
        reports += check_dumbbell_distant(A, i, j)
    return reports


def finite_suite(d: int) -> list[dict]:
    """Relation checks for the finite 2-representation (colors 1..d-1)."""
    return sorted(_color_suite(finite_zigzag(d)), key=lambda r: r["id"])


def affine_suite(d: int) -> list[dict]:
    """Relation checks for the affine 2-representation, including oriented strands."""
    A = affine_zigzag(d)
    reports = _color_suite(A)
    reports += check_oriented_loops(A)
    for i in A.vertices:
        reports += check_oriented_reidemeister(A, i)
        reports += check_oriented_dot_slide_annihilation(A, i)
        reports += check_oriented_dot_slide_creation(A, i)
        reports += check_oriented_pitchfork(A, i)
    reports += check_oriented_zero_slides(A)
    return sorted(reports, key=lambda r: r["id"])
