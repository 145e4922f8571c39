"""Field operations on canonical p-adic numbers.

Sums and differences are formed exactly on integer lifts of the operands and
then reduced to the context precision.  The lift of a unit ``u`` is its
representative in ``(-p**N/2, p**N/2]``, which makes every integer of absolute
value below ``p**N/2`` exact, so cancellation against small negative numbers
does not pull noise from beyond the precision into the result.  Products
and quotients work on the unit parts modulo ``p**N`` and add or subtract
valuations.
"""
from __future__ import annotations

from .core import PadicNumber, canonicalize, check_same_context
from .errors import DivisionByZero


def neg(x: PadicNumber) -> PadicNumber:
    if x.u == 0:
        return x
    return PadicNumber(x.ctx, x.ctx.modulus - x.u, x.v)


def inv(x: PadicNumber) -> PadicNumber:
    if x.u == 0:
        raise DivisionByZero("inverse of zero")
    return PadicNumber(x.ctx, pow(x.u, -1, x.ctx.modulus), -x.v)


def _centered(x: PadicNumber) -> int:
    # representative of the unit in (-p**N/2, p**N/2], so small negatives are exact
    mod = x.ctx.modulus
    return x.u - mod if 2 * x.u > mod else x.u


def _sum_lifts(x: PadicNumber, y: PadicNumber, sign: int) -> PadicNumber:
    check_same_context(x.ctx, y.ctx)
    if y.u == 0:
        return x
    if x.u == 0:
        return y if sign > 0 else neg(y)
    p = x.ctx.p
    m = min(x.v, y.v)
    total = _centered(x) * p ** (x.v - m) + sign * _centered(y) * p ** (y.v - m)
    return canonicalize(total, m, x.ctx)


def add(x: PadicNumber, y: PadicNumber) -> PadicNumber:
    return _sum_lifts(x, y, 1)


def sub(x: PadicNumber, y: PadicNumber) -> PadicNumber:
    return _sum_lifts(x, y, -1)


def mul(x: PadicNumber, y: PadicNumber) -> PadicNumber:
    check_same_context(x.ctx, y.ctx)
    if x.u == 0 or y.u == 0:
        return x.ctx.zero()
    # product of units is a unit, so no valuation shift can occur
    return PadicNumber(x.ctx, x.u * y.u % x.ctx.modulus, x.v + y.v)


def div(x: PadicNumber, y: PadicNumber) -> PadicNumber:
    check_same_context(x.ctx, y.ctx)
    return mul(x, inv(y))


def pow_int(x: PadicNumber, n: int) -> PadicNumber:
    if n == 0:
        return x.ctx.one()
    if x.u == 0:
        if n < 0:
            raise DivisionByZero("zero raised to a negative power")
        return x
    return PadicNumber(x.ctx, pow(x.u, n, x.ctx.modulus), n * x.v)


def equal(x: PadicNumber, y: PadicNumber) -> bool:
    check_same_context(x.ctx, y.ctx)
    return x.u == y.u and x.v == y.v


def is_zero(x: PadicNumber) -> bool:
    return x.u == 0
