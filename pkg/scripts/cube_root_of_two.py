"""Lift the root 3 of x^3 - 2 from Z/5 to Z_5 and show each Newton step.

    python scripts/cube_root_of_two.py [--prime 5] [--prec 20] [--poly "x^3-2"] [--seed 3]
"""
import argparse

from padic import format_padic, hensel_lift, make_context, parse_poly, poly_eval, pow_int, valuation


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--prime", type=int, default=5)
    ap.add_argument("--prec", type=int, default=20)
    ap.add_argument("--poly", default="x^3-2")
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args()

    ctx = make_context(args.prime, args.prec)
    f = parse_poly(args.poly)
    result = hensel_lift(f, args.seed, ctx)
    print(f"f = {f} over {ctx}")
    for k, a in enumerate(result.trace):
        print(f"step {k}: v(f(a)) = {valuation(poly_eval(f, a))}  a = {format_padic(a, 'terse')}")
    print(f"root: {result.root}")
    print(f"iterations: {result.iterations}")
    if f.degree == 3 and f.coeffs[1:] == (0, 0, 1):
        print(f"root^3 = {pow_int(result.root, 3)}")


if __name__ == "__main__":
    main()
