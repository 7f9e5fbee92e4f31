"""Sweep a parameter grid and report worst disagreement per representation pair.

Every in-domain representation is evaluated at each (a, b, n) grid point
and compared pairwise. The summary table shows, for each pair of
representations, the worst relative difference seen anywhere on the grid
and the point that produced it. Exit status is 1 if any pair exceeds the
threshold.

Usage:
    python scripts/representation_grid.py
    python scripts/representation_grid.py --a 0.3,1,5 --b 0.25,4 --nmax 20
"""

import argparse
import sys
from fractions import Fraction
from itertools import combinations, product

from catalankit import (
    c2_double_factorial_sum,
    c2_gf_coefficient,
    c2_hyp_closed,
    c2_hyp_unbounded,
    c2_jacobi,
    c2_legendre,
    c2_quadrature,
    LegendreVariant,
)


def parse_numbers(text):
    return tuple(Fraction(part) for part in text.split(","))


def evaluate_point(a, b, n, quad_tol):
    """All representations defined at (a, b, n), as floats keyed by name."""
    values = {
        "double_factorial": float(c2_double_factorial_sum(a, b, n)),
        "hyp_closed": float(c2_hyp_closed(a, b, n)),
        "gf_coefficient": float(c2_gf_coefficient(a, b, n)),
        "quadrature": c2_quadrature(float(a), float(b), n, tol=quad_tol).value,
    }
    if n >= 1:
        values["jacobi"] = float(c2_jacobi(a, b, n))
    if a > 0 and abs(1 - b / a**2) < 1:
        values["hyp_unbounded"] = c2_hyp_unbounded(float(a), float(b), n)
    if n >= 1 and 0 < a and a * a < b:
        values["legendre_sec2"] = c2_legendre(a, b, n, LegendreVariant.SEC2)
    return values


def main(argv=None):
    parser = argparse.ArgumentParser(
        description="cross-check C2 representations over a grid")
    parser.add_argument("--a", type=parse_numbers, default=(
        Fraction(3, 10), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5)))
    parser.add_argument("--b", type=parse_numbers, default=(
        Fraction(1, 4), Fraction(1), Fraction(4)))
    parser.add_argument("--nmax", type=int, default=12)
    parser.add_argument("--threshold", type=float, default=1e-8)
    parser.add_argument("--quad-tol", type=float, default=1e-10)
    args = parser.parse_args(argv)

    worst = {}  # (rep, rep) -> (diff, a, b, n)
    points = 0
    for a, b in product(args.a, args.b):
        for n in range(args.nmax + 1):
            values = evaluate_point(a, b, n, args.quad_tol)
            points += 1
            for left, right in combinations(sorted(values), 2):
                x, y = values[left], values[right]
                scale = max(abs(x), abs(y), 1e-300)
                diff = abs(x - y) / scale
                key = (left, right)
                if key not in worst or diff > worst[key][0]:
                    worst[key] = (diff, a, b, n)

    width = max(len(f"{l} vs {r}") for l, r in worst)
    print(f"{points} grid points, threshold {args.threshold:g}")
    print()
    failures = 0
    for (left, right), (diff, a, b, n) in sorted(
            worst.items(), key=lambda item: -item[1][0]):
        status = "ok"
        if diff > args.threshold:
            status = "FAIL"
            failures += 1
        pair = f"{left} vs {right}"
        print(f"{pair:<{width}}  {diff:9.3e}  at a={a}, b={b}, n={n}  {status}")
    print()
    if failures:
        print(f"{failures} pair(s) above threshold")
        return 1
    print("all pairs within threshold")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
