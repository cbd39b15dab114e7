"""Command-line front end: computations and verification suites.

Subcommands
-----------
hecke mul/eval   exact products and evaluation-map images, printed in the
                 regular basis of the (extended affine) Hecke algebra;
cell gram        Gram-matrix rank and radical dimension of a cell module;
zigzag info      dimension, trace form, and automorphism order of a zigzag
                 algebra;
complex apply    apply a braid word of Rouquier complexes to a generator
                 Ze_j, minimize, and print the result;
verify <suite>   run a named verification suite, write a deterministic JSON
                 report, and exit 0 iff every check passes.

All arithmetic is exact; reports are byte-identical across runs with the
same arguments and seed.
"""

from __future__ import annotations

import argparse
import ast
import json
import re
import sys
from dataclasses import dataclass

from .scalars import LaurentPoly
from .hecke import HeckeElement
from .evalmaps import EvaluationMap
from .cellmods import CellModule, radical_suite
from .zigzag import affine_zigzag, finite_zigzag
from .homotopy import Complex, apply_rouquier
from . import relations, bireps

SUITES = (
    "relations-Md",
    "relations-Mhat",
    "prop-invariant",
    "end-algebra",
    "decat",
    "cell-radical",
    "rouquier-lemmas",
    "hom-evidence",
)

DEFAULT_SEED = 0
D_CAP = 5


@dataclass
class RunConfig:
    """Resolved parameters of one CLI invocation."""

    command: str
    d: int
    r: int | None = None
    s: int | None = None
    seed: int = DEFAULT_SEED
    a: LaurentPoly | None = None
    z: LaurentPoly | None = None
    lam: LaurentPoly | None = None
    suite: str | None = None
    json_path: str | None = None
    allow_large: bool = False


# -- scalar and element parsing -----------------------------------------------------


def parse_scalar(text: str) -> LaurentPoly:
    """Parse a Laurent polynomial in q, e.g. "q^2", "(-q)^4", "1 - q^-1"."""
    try:
        tree = ast.parse(text.replace("^", "**").strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse scalar {text!r}: {exc}") from None

    def as_int(node) -> int:
        val = evaluate(node)
        if isinstance(val, LaurentPoly):
            raise ValueError(f"exponent must be an integer in {text!r}")
        return val

    def evaluate(node):
        if isinstance(node, ast.Expression):
            return evaluate(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id == "q":
            return LaurentPoly.q()
        if isinstance(node, ast.UnaryOp):
            val = evaluate(node.operand)
            if isinstance(node.op, ast.USub):
                return -val
            if isinstance(node.op, ast.UAdd):
                return val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                base = evaluate(node.left)
                exp = as_int(node.right)
                if isinstance(base, int):
                    base = LaurentPoly.from_int(base)
                return base ** exp
            left, right = evaluate(node.left), evaluate(node.right)
            if isinstance(left, int):
                left = LaurentPoly.from_int(left)
            if isinstance(right, int):
                right = LaurentPoly.from_int(right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
        raise ValueError(f"unsupported expression in scalar {text!r}")

    val = evaluate(tree)
    return LaurentPoly.from_int(val) if isinstance(val, int) else val


_FACTOR = re.compile(
    r"\s*(?:"
    r"(?P<gen>[Tb])(?P<idx>\d+)(?:\^\{?(?P<gexp>-?\d+)\}?)?"
    r"|(?P<rho>rho)(?:\^\{?(?P<rexp>-?\d+)\}?)?"
    r"|\((?P<paren>[^()]*)\)"
    r"|(?P<int>-?\d+)"
    r")\s*"
)


def parse_hecke(d: int, text: str) -> HeckeElement:
    """Parse a product of generators: factors T<i>, b<i>, rho, integers,
    and parenthesized scalars, optionally with integer exponents, joined
    by '*' (e.g. "T1*T1", "rho^-1 * (q) * b0")."""
    result = HeckeElement.one(d)
    pos = 0
    expect_factor = True
    while pos < len(text):
        if not expect_factor:
            if text[pos].isspace():
                pos += 1
                continue
            if text[pos] == "*":
                pos += 1
                expect_factor = True
                continue
            raise ValueError(f"parse error at position {pos} in {text!r}")
        m = _FACTOR.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"parse error at position {pos} in {text!r}")
        if m.group("gen"):
            i = int(m.group("idx"))
            if not 0 <= i < d:
                raise ValueError(f"generator index {i} out of range for d={d}")
            base = (
                HeckeElement.T(d, i) if m.group("gen") == "T"
                else HeckeElement.b(d, i)
            )
            exp = int(m.group("gexp") or 1)
            factor = base ** exp
        elif m.group("rho"):
            factor = HeckeElement.rho_elt(d, int(m.group("rexp") or 1))
        elif m.group("paren") is not None:
            factor = HeckeElement.one(d).scale(parse_scalar(m.group("paren")))
        else:
            factor = HeckeElement.one(d).scale(LaurentPoly.from_int(int(m.group("int"))))
        result = result * factor
        pos = m.end()
        expect_factor = False
    if expect_factor:
        raise ValueError(f"trailing '*' or empty expression in {text!r}")
    return result


def render_hecke(x: HeckeElement) -> str:
    """Regular-basis expansion, e.g. "1 + (q^-1 - q) T_{s1}"."""
    if not x.terms:
        return "0"
    parts = []
    for g in sorted(x.terms, key=lambda g: (g.length(), g.window)):
        m, word = g.reduced_word()
        name = ""
        if m:
            name = "rho" if m == 1 else f"rho^{m}"
        if word:
            name += (" " if name else "") + "T_{" + " ".join(f"s{i}" for i in word) + "}"
        coeff = x.terms[g]
        cs = repr(coeff)
        if not name:
            parts.append(cs if coeff.is_monomial() else f"({cs})")
        elif coeff.is_one():
            parts.append(name)
        elif coeff.is_monomial():
            parts.append(f"{cs} {name}")
        else:
            parts.append(f"({cs}) {name}")
    return " + ".join(parts)


def render_complex(C: Complex) -> str:
    lines = []
    for n in C.support():
        terms = " + ".join(f"P({v})<{t}>" for v, t in C.term(n).summands)
        lines.append(f"  degree {n}: {terms or '0'}")
    if not lines:
        lines.append("  0")
    return "\n".join(lines)


# -- subcommand handlers --------------------------------------------------------------


def cmd_hecke(args) -> int:
    d = args.d
    x = parse_hecke(d, args.expr)
    if args.action == "eval":
        a = parse_scalar(args.a)
        x = EvaluationMap(d, a, prime=args.prime)(x)
    print(render_hecke(x))
    return 0


def cmd_cell(args) -> int:
    z = parse_scalar(args.z)
    lam = parse_scalar(args.lam)
    mod = CellModule(args.d, z, lam)
    rank = mod.gram_rank()
    rad = mod.radical_basis()
    print(f"cell module: d={args.d}, z={z!r}, lambda={lam!r}")
    print(f"gram rank: {rank}")
    print(f"radical dimension: {len(rad)}")
    return 0


def cmd_zigzag(args) -> int:
    A = finite_zigzag(args.d) if args.finite else affine_zigzag(args.d)
    kind = "finite" if args.finite else "affine"
    dim = len(A.basis)
    print(f"{kind} zigzag algebra: d={args.d}, dimension {dim}")
    n = len(A.basis)
    gram = [
        [A.trace_basis(A.mul_basis(b, c)[1]) * A.mul_basis(b, c)[0]
         if A.mul_basis(b, c) else 0
         for c in A.basis]
        for b in A.basis
    ]
    from fractions import Fraction
    from . import linalg
    rank = linalg.rank([[Fraction(e) for e in row] for row in gram])
    print(f"trace form rank: {rank} ({'non-degenerate' if rank == n else 'degenerate'})")
    if not args.finite:
        order = 1
        while order <= 4 * args.d:
            if all(A.tau_basis(b, order) == (1, b) for b in A.basis):
                break
            order += 1
        print(f"tau order: {order}")
    return 0


def cmd_complex(args) -> int:
    A = affine_zigzag(args.d)
    C = Complex.generator(A, args.vertex)
    for tok in (args.braid or "").replace(",", " ").split():
        i = int(tok)
        if not 1 <= abs(i) < args.d:
            raise ValueError(f"braid letter {i} out of range for d={args.d}")
        C = apply_rouquier(C, abs(i), 1 if i > 0 else -1)
    M = C.minimize()
    print(f"minimal model of the braid word applied to Ze_{args.vertex}:")
    print(render_complex(M))
    cls = M.decat()
    pieces = ", ".join(f"[P({v})] * ({cls[v]!r})" for v in sorted(cls)) or "0"
    print(f"class: {pieces}")
    return 0


def run_suite(cfg: RunConfig) -> list[dict]:
    d, seed = cfg.d, cfg.seed
    if cfg.suite == "relations-Md":
        return relations.finite_suite(d)
    if cfg.suite == "relations-Mhat":
        return relations.affine_suite(d)
    if cfg.suite == "prop-invariant":
        checks = bireps.verify_prop_invariant(d, cfg.r, cfg.s, seed)
        checks += bireps.verify_phi_compatibility(d, cfg.r, cfg.s, seed)
        return sorted(checks, key=lambda rep: rep["id"])
    if cfg.suite == "end-algebra":
        return bireps.verify_end_algebra(d, seed)
    if cfg.suite == "decat":
        return bireps.verify_decategorification(d, cfg.r, cfg.s)
    if cfg.suite == "cell-radical":
        return radical_suite(d, cfg.z, cfg.lam)
    if cfg.suite == "rouquier-lemmas":
        return bireps.rouquier_lemma_suite(d, seed)
    if cfg.suite == "hom-evidence":
        return bireps.hom_dimension_evidence_nonfullness(d)
    raise ValueError(f"unknown suite {cfg.suite!r}")


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        print(f"unknown suite {args.suite!r}; choose from: {', '.join(SUITES)}",
              file=sys.stderr)
        return 2
    if args.d > D_CAP and not args.allow_large:
        print(f"d={args.d} exceeds the default resource cap d <= {D_CAP}; "
              "pass --allow-large to override", file=sys.stderr)
        return 2
    cfg = RunConfig(
        command="verify",
        d=args.d,
        r=args.r,
        s=args.s,
        seed=args.seed,
        z=parse_scalar(args.z) if args.z else None,
        lam=parse_scalar(args.lam) if args.lam else None,
        suite=args.suite,
        json_path=args.json,
        allow_large=args.allow_large,
    )
    checks = sorted(run_suite(cfg), key=lambda rep: rep["id"])
    all_pass = all(rep["pass"] for rep in checks)
    report = {
        "schema": 1,
        "suite": cfg.suite,
        "params": {
            "d": cfg.d,
            "r": cfg.r,
            "s": cfg.s,
            "seed": cfg.seed,
            "z": repr(cfg.z) if cfg.z is not None else None,
            "lambda": repr(cfg.lam) if cfg.lam is not None else None,
        },
        "checks": checks,
        "pass": all_pass,
    }
    text = json.dumps(report, indent=2, sort_keys=False) + "\n"
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    n_fail = sum(1 for rep in checks if not rep["pass"])
    print(f"{cfg.suite}: {len(checks) - n_fail}/{len(checks)} checks passed",
          file=sys.stderr)
    return 0 if all_pass else 1


# -- argument parsing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zzeval",
        description="Exact computations with Hecke algebras, cell modules, "
                    "zigzag algebras, and complexes of graded projectives.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_d=True):
        p.add_argument("--d", type=int, required=need_d, help="rank parameter (>= 3)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = sub.add_parser("hecke", help="Hecke-algebra products and evaluation images")
    p.add_argument("action", choices=["mul", "eval"])
    p.add_argument("expr", help='element expression, e.g. "T1*T1" or "rho"')
    common(p)
    p.add_argument("--a", default="q", help="evaluation parameter (scalar in q)")
    p.add_argument("--prime", action="store_true",
                   help="use the second evaluation map (rho -> a' T_1...T_{d-1})")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("cell", help="cell-module Gram matrix and radical")
    p.add_argument("action", choices=["gram"])
    common(p)
    p.add_argument("--z", default="(-q)^3", help="loop parameter z")
    p.add_argument("--lam", default="1", help="rotation eigenvalue lambda")
    p.set_defaults(func=cmd_cell)

    p = sub.add_parser("zigzag", help="zigzag-algebra invariants")
    p.add_argument("action", choices=["info"])
    common(p)
    p.add_argument("--finite", action="store_true", help="use the finite type-A quiver")
    p.set_defaults(func=cmd_zigzag)

    p = sub.add_parser("complex", help="Rouquier complexes acting on generators")
    p.add_argument("action", choices=["apply"])
    common(p)
    p.add_argument("--vertex", type=int, default=1, help="generator vertex j of Ze_j")
    p.add_argument("--braid", default="",
                   help='braid word, e.g. "1 -2 1" (negative = inverse)')
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="one of: " + ", ".join(SUITES))
    common(p)
    p.add_argument("--r", type=int, default=None, help="internal-shift twist")
    p.add_argument("--s", type=int, default=None, help="homological-shift twist")
    p.add_argument("--z", default=None, help="cell-module loop parameter")
    p.add_argument("--lam", default=None, help="cell-module rotation eigenvalue")
    p.add_argument("--json", default=None, metavar="PATH",
                   help="write the JSON report to PATH instead of stdout")
    p.add_argument("--allow-large", action="store_true",
                   help=f"override the d <= {D_CAP} resource cap")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.d is not None and args.d < 3:
        print("--d must be at least 3", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
