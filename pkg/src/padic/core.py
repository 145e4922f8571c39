"""Contexts and the canonical (unit, valuation) representation of p-adic numbers.

A nonzero element of Q_p is stored as ``u * p**v`` where ``u`` is an integer
coprime to ``p`` holding the first ``N`` base-p digits of the unit part, and
``N`` is the context precision.  Zero is stored as ``u = 0, v = 0``.
"""
from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ContextMismatch, PrecisionError, PrimalityError

DEFAULT_PRECISION = 20

# Deterministic Miller-Rabin witnesses for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrintMode(str, enum.Enum):
    SERIES = "series"
    TERSE = "terse"
    VAL_UNIT = "val-unit"


@dataclass(frozen=True)
class PadicContext:
    """The prime, the number of unit digits kept, and the display mode."""

    p: int
    precision: int = DEFAULT_PRECISION
    print_mode: PrintMode = PrintMode.SERIES
    modulus: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise PrimalityError(f"{self.p} is not prime")
        if not isinstance(self.precision, int) or self.precision < 1:
            raise PrecisionError(f"precision must be a positive integer, got {self.precision}")
        object.__setattr__(self, "print_mode", PrintMode(self.print_mode))
        object.__setattr__(self, "modulus", self.p**self.precision)

    def __str__(self):
        return f"QQ_{self.p} (of precision {self.precision})"

    def __call__(self, value) -> PadicNumber:
        """Promote an int, Fraction or numeric string into this context."""
        from .convert import from_integer, from_rational, parse_padic

        if isinstance(value, PadicNumber):
            check_same_context(value.ctx, self)
            return value
        if isinstance(value, int):
            return from_integer(value, self)
        if isinstance(value, Fraction):
            return from_rational(value, self)
        if isinstance(value, str):
            return parse_padic(value, self)
        raise TypeError(f"cannot promote {type(value).__name__} to {self}")

    def zero(self) -> PadicNumber:
        return PadicNumber(self, 0, 0)

    def one(self) -> PadicNumber:
        return PadicNumber(self, 1, 0)


_registry: dict[tuple[int, int, PrintMode], PadicContext] = {}
_registry_lock = threading.Lock()


def make_context(p: int, precision: int = DEFAULT_PRECISION,
                 print_mode: PrintMode | str = PrintMode.SERIES) -> PadicContext:
    """Return the unique shared context for ``(p, precision, print_mode)``."""
    key = (p, precision, PrintMode(print_mode))
    ctx = _registry.get(key)
    if ctx is not None:
        return ctx
    with _registry_lock:
        ctx = _registry.get(key)
        if ctx is None:
            ctx = PadicContext(*key)
            _registry[key] = ctx
        return ctx


def check_same_context(a: PadicContext, b: PadicContext) -> None:
    if a is not b and a != b:
        raise ContextMismatch(f"cannot combine {a.p}-adic numbers at precision "
                              f"{a.precision} ({a.print_mode.value}) with {b.p}-adic "
                              f"numbers at precision {b.precision} ({b.print_mode.value})")


_set = object.__setattr__


class PadicNumber:
    """An immutable canonical ``u * p**v`` in a given context."""

    # a slotted class rather than a frozen dataclass: construction is on every hot path
    __slots__ = ("ctx", "u", "v")

    def __init__(self, ctx: PadicContext, u: int, v: int):
        if u == 0:
            if v != 0:
                raise ValueError("zero must be stored as u=0, v=0")
        elif not (0 < u < ctx.modulus) or u % ctx.p == 0:
            raise ValueError(f"non-canonical unit {u} for p={ctx.p}, N={ctx.precision}")
        _set(self, "ctx", ctx)
        _set(self, "u", u)
        _set(self, "v", v)

    def __setattr__(self, name, value):
        raise AttributeError(f"PadicNumber is immutable (cannot set {name!r})")

    __delattr__ = __setattr__

    def __reduce__(self):
        return PadicNumber, (self.ctx, self.u, self.v)

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def precision(self) -> int:
        return self.ctx.precision

    def __repr__(self):
        return f"PadicNumber(p={self.ctx.p}, N={self.ctx.precision}, u={self.u}, v={self.v})"

    def __str__(self):
        from .convert import format_padic

        return format_padic(self)

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.precision, self.u, self.v))

    def __bool__(self):
        return self.u != 0

    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx(other)
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return arith.equal(self, other)

    def __neg__(self):
        return arith.neg(self)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else arith.add(self, other)

    def __radd__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else arith.add(other, self)

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else arith.sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else arith.sub(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else arith.mul(self, other)

    def __rmul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else arith.mul(other, self)

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else arith.div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else arith.div(other, self)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return arith.pow_int(self, n)


@dataclass(frozen=True)
class Expansion:
    """Digits ``a_start, a_{start+1}, ...`` of a base-p Laurent expansion."""

    p: int
    start: int
    digits: tuple[int, ...]

    def terms(self):
        """Yield ``(digit, exponent)`` for the nonzero digits, lowest exponent first."""
        for n, a in enumerate(self.digits):
            if a:
                yield a, self.start + n

    def value(self) -> Fraction:
        return sum((Fraction(a) * Fraction(self.p) ** k for a, k in self.terms()), Fraction(0))

    def reassemble(self, ctx: PadicContext) -> PadicNumber:
        if ctx.p != self.p:
            raise ContextMismatch(f"expansion in base {self.p} used with p={ctx.p}")
        u = 0
        for a in reversed(self.digits):
            u = u * self.p + a
        return canonicalize(u, self.start, ctx)


def canonicalize(u: int, v: int, ctx: PadicContext) -> PadicNumber:
    """Normalize ``u * p**v`` to canonical form at the context precision.

    ``u`` divisible by ``p**N`` is indistinguishable from zero at this precision
    and gives canonical zero.  Otherwise the powers of p are moved into the
    valuation and the remaining unit is reduced modulo ``p**N``.
    """
    p, mod = ctx.p, ctx.modulus
    if u % mod == 0:
        return PadicNumber(ctx, 0, 0)
    while u % p == 0:
        u //= p
        v += 1
    return PadicNumber(ctx, u % mod, v)


def valuation(x: PadicNumber) -> int | float:
    """The p-adic valuation; ``math.inf`` for zero."""
    return math.inf if x.u == 0 else x.v


def abs_p(x: PadicNumber) -> Fraction:
    if x.u == 0:
        return Fraction(0)
    return Fraction(x.ctx.p) ** -x.v


def digits(x: PadicNumber) -> Expansion:
    p, n = x.ctx.p, x.ctx.precision
    out = []
    u = x.u
    for _ in range(n):
        u, a = divmod(u, p)
        out.append(a)
    return Expansion(p, x.v, tuple(out))


from . import arith  # noqa: E402  (operators on PadicNumber dispatch here)
