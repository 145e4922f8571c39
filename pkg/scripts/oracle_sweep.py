"""Compare the field operations with the exact-rational oracle on random inputs.

    python scripts/oracle_sweep.py --primes 2 3 5 7 11 --prec 20 --count 2000 --seed 0

Operands are rationals that the context holds exactly (see tests/helpers.py),
so every result is compared bit for bit.  Prints one line per (op, prime).
"""
import argparse
import random
import time
from fractions import Fraction

from padic import add, div, from_rational, inv, make_context, mul, pow_int, sub
from padic.oracle import oracle_op


def exact_rational(rng, p, n, max_val=8):
    k = rng.randrange(1, (p**n - 1) // 2 + 1)
    return rng.choice((1, -1)) * k * Fraction(p) ** rng.randrange(-max_val, max_val + 1)


OPS = {
    "add": lambda x, y, k: add(x, y),
    "sub": lambda x, y, k: sub(x, y),
    "mul": lambda x, y, k: mul(x, y),
    "div": lambda x, y, k: div(x, y),
    "inv": lambda x, y, k: inv(x),
    "pow": lambda x, y, k: pow_int(x, k),
}


def sweep(op, p, n, count, rng):
    ctx = make_context(p, n)
    mismatches = 0
    for _ in range(count):
        a, b, k = exact_rational(rng, p, n), exact_rational(rng, p, n), rng.randrange(-12, 13)
        got = OPS[op](from_rational(a, ctx), from_rational(b, ctx), k)
        second = {"inv": None, "pow": k}.get(op, b)
        want = oracle_op(op, a, second, p=p, n=n)
        mismatches += (got.u, got.v) != (want.u, want.v)
    return mismatches


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7, 11])
    ap.add_argument("--prec", type=int, default=20)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    total = 0
    for op in OPS:
        for p in args.primes:
            start = time.perf_counter()
            bad = sweep(op, p, args.prec, args.count, rng)
            total += bad
            print(f"{op:4} p={p:<3} N={args.prec}: {args.count - bad}/{args.count} match "
                  f"({time.perf_counter() - start:.2f} s)")
    print("all match" if total == 0 else f"{total} mismatches")
    raise SystemExit(1 if total else 0)


if __name__ == "__main__":
    main()
