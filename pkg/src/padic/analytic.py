"""Square roots, exp, log and Teichmüller lifts.

Everything is done with exact integer arithmetic modulo powers of p.  The
power series keep every term as ``unit * p**e`` with the unit reduced modulo
the target precision, so denominators divisible by p never need rationals.
"""
from __future__ import annotations

from functools import lru_cache

from .core import PadicNumber, canonicalize
from .errors import NotASquare, OutsideDomain


def _split(n: int, p: int) -> tuple[int, int]:
    """Return ``(e, m)`` with ``n == m * p**e`` and ``p`` not dividing ``m``."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


@lru_cache(maxsize=4096)
def _tonelli_constants(p: int) -> tuple[int, int, int]:
    # p - 1 == q * 2**s with q odd, and c = z**q for a non-residue z
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    return q, s, pow(z, q, p)


def sqrt_mod_prime(a: int, p: int) -> int | None:
    """A square root of ``a`` mod the odd prime ``p`` (Tonelli-Shanks); None for non-residues."""
    a %= p
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return r if r * r % p == a else None
    q, m, c = _tonelli_constants(p)
    w = pow(a, (q - 1) // 2, p)
    r = w * a % p  # a**((q+1)/2)
    t = w * r % p  # a**q
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
            if i == m:
                return None  # a**((p-1)/2) == -1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _unit_sqrt_odd(u: int, p: int, n: int) -> int | None:
    r = sqrt_mod_prime(u, p)
    if r is None:
        return None
    k = 1
    while k < n:
        k = min(2 * k, n)
        mod = p**k
        r = (r - (r * r - u) * pow(2 * r, -1, mod)) % mod
    return r


def _unit_sqrt_two(u: int, n: int) -> int:
    r = 1
    for k in range(3, n):
        # r*r == u mod 2**k; fix bit k-1 so it holds mod 2**(k+1)
        if (r * r - u) % (1 << (k + 1)):
            r += 1 << (k - 1)
    return r % (1 << n)


def sqrt(x: PadicNumber) -> PadicNumber:
    """Square root; of the roots, the one with the smallest unit lift."""
    if x.u == 0:
        return x
    p, n, mod = x.ctx.p, x.ctx.precision, x.ctx.modulus
    if x.v % 2:
        raise NotASquare("odd valuation")
    if p == 2:
        if x.u % 8 != 1:
            raise NotASquare("non-residue unit")
        r = _unit_sqrt_two(x.u, n)
        half = mod >> 1
        candidates = {r, -r % mod, (r + half) % mod, (half - r) % mod}
        root = min(c for c in candidates if c % 2 and (c * c - x.u) % mod == 0)
    else:
        r = _unit_sqrt_odd(x.u, p, n)
        if r is None:
            raise NotASquare("non-residue unit")
        root = min(r, mod - r)
    return PadicNumber(x.ctx, root, x.v // 2)


def _min_valuation(p: int) -> int:
    return 2 if p == 2 else 1


def exp(x: PadicNumber) -> PadicNumber:
    """Sum of ``x**n / n!``; requires ``v(x) >= 1`` (``>= 2`` when p = 2)."""
    ctx = x.ctx
    if x.u == 0:
        return ctx.one()
    p, target = ctx.p, ctx.precision
    if x.v < _min_valuation(p):
        raise OutsideDomain(f"exp needs valuation >= {_min_valuation(p)}, got {x.v}")
    mod = ctx.modulus
    total = 1
    # term n is unit * p**e with e = n*v - v_p(n!)
    unit, e, fact_val = 1, 0, 0
    n = 0
    while True:
        n += 1
        # Legendre: v_p(n!) <= (n - 1) // (p - 1), and this bound never decreases in n
        if n * x.v - (n - 1) // (p - 1) >= target:
            break
        k, m = _split(n, p)
        fact_val += k
        unit = unit * x.u * pow(m, -1, mod) % mod
        e = n * x.v - fact_val
        if e < target:
            total += unit * p**e
    return canonicalize(total % mod, 0, ctx)


def log(x: PadicNumber) -> PadicNumber:
    """Sum of ``(-1)**(n-1) * (x-1)**n / n``; requires ``v(x-1) >= 1`` (``>= 2`` when p = 2)."""
    ctx = x.ctx
    p = ctx.p
    if x.u == 0 or x.v != 0:
        raise OutsideDomain("log needs a unit argument")
    z = x.u - 1
    if z == 0:
        return ctx.zero()
    w, zu = _split(z, p)
    if w < _min_valuation(p):
        raise OutsideDomain(f"log needs valuation(x - 1) >= {_min_valuation(p)}, got {w}")
    # the result has valuation exactly w, so N unit digits need absolute precision w + N
    target = w + ctx.precision
    mod = p**target
    total = 0
    zn = 1
    n = 0
    while True:
        n += 1
        # v_p(n) <= floor(log_p n) grows by at most 1 per step while n*w grows by w >= 1
        if n * w - _floor_log(n, p) >= target:
            break
        zn = zn * zu % mod
        k, m = _split(n, p)
        e = n * w - k
        if e < target:
            term = zn * pow(m, -1, mod) % mod * p**e
            total += term if n % 2 else -term
    unit = total % mod // p**w
    return PadicNumber(ctx, unit % ctx.modulus, w)


def _floor_log(n: int, p: int) -> int:
    k = 0
    while n >= p:
        n //= p
        k += 1
    return k


def teichmuller(x: PadicNumber) -> PadicNumber:
    """The (p-1)-th root of unity congruent to ``x`` modulo p."""
    if x.u == 0 or x.v != 0:
        raise OutsideDomain("Teichmüller lift needs a unit (valuation 0)")
    ctx = x.ctx
    p, n = ctx.p, ctx.precision
    t = x.u % p
    k = 1
    # Newton on t**(p-1) - 1, doubling the working precision each step
    while k < n:
        k = min(2 * k, n)
        mod = p**k
        f = pow(t, p - 1, mod) - 1
        df = (p - 1) * pow(t, p - 2, mod)
        t = (t - f * pow(df, -1, mod)) % mod
    return PadicNumber(ctx, t, 0)
