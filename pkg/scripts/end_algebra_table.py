#!/usr/bin/env python3
"""Print the graded Hom dimension table between the objects X_0..X_{d-1}.

Usage:
    python3 scripts/end_algebra_table.py [--d D]

For each ordered pair (a, b) of objects, lists the bidegrees (t, n)
(internal shift t, homological shift n) in which Hom(X_a, X_b <t> [n]) is
nonzero in the homotopy category, with its dimension.  Summing all entries
recovers the total dimension 4d of the ungraded endomorphism algebra.
"""

import argparse

from zzeval.bireps import _hom_dim_sweep, build_X_objects


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, default=3)
    args = ap.parse_args()
    d = args.d

    X = build_X_objects(d)
    dims = _hom_dim_sweep(d, X)
    total = 0
    for a in range(d):
        for b in range(d):
            entries = dims.get((a, b), {})
            if not entries:
                continue
            total += sum(entries.values())
            cells = ", ".join(
                f"(t={t}, n={n}): {k}" for (t, n), k in sorted(entries.items())
            )
            print(f"Hom(X_{a}, X_{b}): {cells}")
    print(f"total dimension: {total} (expected {4 * d})")


if __name__ == "__main__":
    main()
