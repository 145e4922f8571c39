import math
from fractions import Fraction
import random

from padic import PadicNumber, make_context, sub, valuation


def agree(a, b, guard=2, ref=None):
    """True when ``a`` and ``b`` match once the top ``guard`` unit digits are dropped.

    Digits are counted from ``ref``, by default the smaller valuation of the two.
    Pass the valuation of the summands when one side is a sum that cancels.
    """
    if ref is None:
        ref = min(valuation(a), valuation(b))
    if ref == math.inf:
        return True
    diff = sub(a, b)
    return valuation(diff) >= ref + a.precision - guard


def random_unit(rng, ctx):
    while True:
        u = rng.randrange(1, ctx.modulus)
        if u % ctx.p:
            return u


def series_min_valuation(p):
    return 2 if p == 2 else 1


def random_exp_arg(rng, ctx, extra=0):
    """A nonzero point of the exp disc with valuation ``min + extra``."""
    return PadicNumber(ctx, random_unit(rng, ctx), series_min_valuation(ctx.p) + extra)


def random_log_arg(rng, ctx, extra=0):
    """``1 + z`` with ``z`` in the exp disc at valuation ``min + extra``."""
    return sub(ctx.one(), random_exp_arg(rng, ctx, extra))


def context(p, n=20):
    return make_context(p, n)


def seeded(seed):
    return random.Random(seed)


def random_exact_rational(rng, p, n, max_val=8):
    """A nonzero rational that the (p, n) context holds exactly: +-k * p**e, 0 < k < p**n / 2."""
    k = rng.randrange(1, (p**n - 1) // 2 + 1)
    e = rng.randrange(-max_val, max_val + 1)
    sign = rng.choice((1, -1))
    return sign * k * Fraction(p) ** e


def random_rational(rng, bound=10**6):
    """A nonzero rational with numerator and denominator up to ``bound``."""
    num = rng.choice((1, -1)) * rng.randrange(1, bound)
    return Fraction(num, rng.randrange(1, bound))


# root of x^3 - 2 in Z_5 congruent to 3, to 20 digits
CUBE_ROOT_OF_TWO = ("3 + 2*5^2 + 2*5^3 + 3*5^4 + 1*5^5 + 4*5^6 + 2*5^8 + 3*5^9 + 4*5^12 + "
                    "4*5^14 + 4*5^15 + 3*5^16 + 1*5^17 + 1*5^18 + 2*5^19")
