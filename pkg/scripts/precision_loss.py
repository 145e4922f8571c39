"""How many digits of s survive the round trip log(exp(s)) at fixed relative precision.

    python scripts/precision_loss.py --prec 20 --samples 200

For each prime and each valuation v of s, reports the smallest number of
correct digits of s (counted from v) over the samples.  exp(s) is a unit
known mod p^N, so about v digits are lost; the guard-digit comparison in
the acceptance suite is based on this.
"""
import argparse
import math
import random

from padic import PadicNumber, exp, log, make_context, sub, valuation


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    ap.add_argument("--prec", type=int, default=20)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--max-val", type=int, default=6)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'p':>3} {'v(s)':>5} {'min correct digits':>19} {'lost':>5}")
    for p in args.primes:
        ctx = make_context(p, args.prec)
        lowest = 2 if p == 2 else 1
        for v in range(lowest, args.max_val + 1):
            worst = args.prec
            for _ in range(args.samples):
                u = rng.randrange(1, ctx.modulus)
                while u % p == 0:
                    u = rng.randrange(1, ctx.modulus)
                s = PadicNumber(ctx, u, v)
                d = valuation(sub(log(exp(s)), s))
                worst = min(worst, args.prec if d == math.inf else d - v)
            print(f"{p:>3} {v:>5} {worst:>19} {args.prec - worst:>5}")


if __name__ == "__main__":
    main()
