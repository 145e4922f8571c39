"""Slow reference implementations used to check the production modules.

Nothing here calls ``arith``, ``analytic``, ``convert`` or ``hensel``.  The
operations are carried out on exact ``Fraction`` values or by scanning every
residue modulo ``p**N``, and the results are converted to canonical form by a
separate routine.  Only ``PadicNumber`` and ``make_context`` are shared so that
the answers can be compared directly.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .core import PadicNumber, make_context
from .errors import DivisionByZero, OutsideDomain


class NotFound(LookupError):
    pass


def _vp(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of 0")
    n = abs(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def rational_valuation(q: Fraction, p: int) -> int:
    q = Fraction(q)
    return _vp(q.numerator, p) - _vp(q.denominator, p)


def exact_to_padic(q: Fraction, p: int, n: int) -> PadicNumber:
    """Canonical form of the exact rational ``q``: ``u = q / p**v`` reduced mod ``p**n``."""
    ctx = make_context(p, n)
    q = Fraction(q)
    if q == 0:
        return PadicNumber(ctx, 0, 0)
    v = rational_valuation(q, p)
    unit = q / Fraction(p) ** v
    mod = p**n
    u = unit.numerator * pow(unit.denominator, -1, mod) % mod
    return PadicNumber(ctx, u, v)


def padic_to_exact(x: PadicNumber) -> Fraction:
    return Fraction(x.u) * Fraction(x.ctx.p) ** x.v if x.u else Fraction(0)


def oracle_op(op: str, a, b=None, p: int = 2, n: int = 20) -> PadicNumber:
    a = Fraction(a)
    if op == "add":
        r = a + Fraction(b)
    elif op == "sub":
        r = a - Fraction(b)
    elif op == "mul":
        r = a * Fraction(b)
    elif op == "div":
        if Fraction(b) == 0:
            raise DivisionByZero("oracle division by zero")
        r = a / Fraction(b)
    elif op == "neg":
        r = -a
    elif op == "inv":
        if a == 0:
            raise DivisionByZero("oracle inverse of zero")
        r = 1 / a
    elif op == "pow":
        if a == 0 and b < 0:
            raise DivisionByZero("oracle zero to a negative power")
        r = a**b
    else:
        raise ValueError(f"unknown operation {op!r}")
    return exact_to_padic(r, p, n)


def _series_terms_needed(kind: str, v: int, p: int, absolute: int) -> int:
    # smallest count K such that every term with index >= K has valuation >= absolute;
    # found by scanning a bound that is monotone in the index
    k = 1
    while True:
        if kind == "exp":
            bound = Fraction(k * v) - Fraction(k, p - 1)
        else:
            bound = k * v - _vp_log_bound(k, p)
        if bound >= absolute:
            return k
        k += 1


def _vp_log_bound(k: int, p: int) -> int:
    e = 0
    while p ** (e + 1) <= k:
        e += 1
    return e


def oracle_series(kind: str, x, p: int, n: int) -> PadicNumber:
    """Partial sum of the exp or log power series as an exact rational."""
    x = Fraction(x)
    min_val = 2 if p == 2 else 1
    if kind == "exp":
        if x == 0:
            return exact_to_padic(Fraction(1), p, n)
        v = rational_valuation(x, p)
        if v < min_val:
            raise OutsideDomain("exp argument outside the disc of convergence")
        count = _series_terms_needed("exp", v, p, n)
        total, term = Fraction(0), Fraction(1)
        for k in range(count):
            if k:
                term = term * x / k
            total += term
        return exact_to_padic(total, p, n)
    if kind == "log":
        z = x - 1
        if z == 0:
            return exact_to_padic(Fraction(0), p, n)
        w = rational_valuation(z, p)
        if w < min_val:
            raise OutsideDomain("log argument outside the disc of convergence")
        count = _series_terms_needed("log", w, p, w + n)
        total = sum((Fraction((-1) ** (k - 1)) * z**k / k for k in range(1, count)), Fraction(0))
        return exact_to_padic(total, p, n)
    raise ValueError(f"unknown series {kind!r}")


@lru_cache(maxsize=64)
def _square_table(p: int, n: int) -> dict[int, int]:
    mod = p**n
    table: dict[int, int] = {}
    for r in range(mod):
        table.setdefault(r * r % mod, r)
    return table


@lru_cache(maxsize=64)
def _teichmuller_table(p: int, n: int) -> dict[int, int]:
    mod = p**n
    table: dict[int, int] = {}
    for r in range(1, mod):
        if r % p and pow(r, p, mod) == r:
            table.setdefault(r % p, r)
    return table


def oracle_table(kind: str, p: int, n: int) -> dict[int, int]:
    """The full answer table behind ``oracle_search`` for ``sqrt`` or ``teichmuller``.

    ``sqrt`` maps each square residue mod ``p**n`` to its smallest root; ``teichmuller``
    maps each unit residue mod ``p`` to its root of unity mod ``p**n``.
    """
    if p**n > 10**6:
        raise ValueError("search space too large")
    if kind == "sqrt":
        return _square_table(p, n)
    if kind == "teichmuller":
        return _teichmuller_table(p, n)
    raise ValueError(f"unknown table {kind!r}")


def oracle_search(kind: str, target, p: int, n: int, seed: int | None = None) -> int:
    """Exhaustive search over residues modulo ``p**n``.

    ``sqrt``: smallest r with r*r == target.  ``teichmuller``: r with r**p == r and
    r == target mod p.  ``polyroot``: ``target`` is a coefficient sequence (lowest
    degree first) and r is the smallest root congruent to ``seed`` mod p.
    """
    mod = p**n
    if mod > 10**6:
        raise ValueError("search space too large")
    if kind == "sqrt":
        r = _square_table(p, n).get(target % mod)
    elif kind == "teichmuller":
        r = _teichmuller_table(p, n).get(target % p) if target % p else None
    elif kind == "polyroot":
        coeffs = tuple(target)
        r = None
        for cand in range(seed % p, mod, p):
            if sum(c * pow(cand, k, mod) for k, c in enumerate(coeffs)) % mod == 0:
                r = cand
                break
    else:
        raise ValueError(f"unknown search {kind!r}")
    if r is None:
        raise NotFound(f"no {kind} residue for {target!r} mod {p}^{n}")
    return r
