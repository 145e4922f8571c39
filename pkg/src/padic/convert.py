"""Moving between Z, Q and Q_p, and the text formats.

Three print modes are supported:

* ``series``   ``3 + 2*5^2 + 1*5^3``: nonzero digits, lowest exponent first
* ``terse``    the exact rational ``u * p**v`` in decimal (``50``, ``7/9``)
* ``val-unit`` ``u*p^v`` (``2*5^2``), or just ``u`` when ``v == 0``

``parse_padic`` reads all three back.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .core import PadicContext, PadicNumber, PrintMode, canonicalize, digits
from .errors import NegativeValuation, PadicSyntaxError


def from_integer(k: int, ctx: PadicContext) -> PadicNumber:
    return canonicalize(k, 0, ctx)


def from_rational(q: Fraction, ctx: PadicContext) -> PadicNumber:
    q = Fraction(q)
    if q == 0:
        return ctx.zero()
    p = ctx.p
    num, den, v = q.numerator, q.denominator, 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    mod = ctx.modulus
    return PadicNumber(ctx, num * pow(den, -1, mod) % mod, v)


def to_integer(x: PadicNumber) -> int:
    """The integer lift ``u * p**v`` in ``[0, p**(v+N))``."""
    if x.u == 0:
        return 0
    if x.v < 0:
        raise NegativeValuation(f"valuation {x.v} < 0 has no integer lift")
    return x.u * x.ctx.p**x.v


def to_rational(x: PadicNumber) -> Fraction:
    if x.u == 0:
        return Fraction(0)
    return x.u * Fraction(x.ctx.p) ** x.v


def _power_term(a: int, p: int, k: int) -> str:
    if k == 0:
        return str(a)
    if k == 1:
        return f"{a}*{p}"
    return f"{a}*{p}^{k}"


def format_padic(x: PadicNumber, mode: PrintMode | str | None = None) -> str:
    mode = x.ctx.print_mode if mode is None else PrintMode(mode)
    if x.u == 0:
        return "0"
    p = x.ctx.p
    if mode is PrintMode.SERIES:
        return " + ".join(_power_term(a, p, k) for a, k in digits(x).terms())
    if mode is PrintMode.TERSE:
        return str(to_rational(x))
    if x.v == 0:
        return str(x.u)
    return f"{x.u}*{p}^{x.v}"


_TOKEN = re.compile(r"(\d+)|([A-Za-z_]\w*)|(\S)")
_KINDS = ("int", "name", "op")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN.finditer(text):
        kind = _KINDS[m.lastindex - 1]
        tokens.append((kind, m.group(m.lastindex), m.start()))
    tokens.append(("end", "", len(text)))
    return tokens


class _Reader:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind, value=None):
        tok = self.tokens[self.i]
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PadicSyntaxError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def accept(self, value) -> bool:
        if self.tokens[self.i][:2] == ("op", value):
            self.i += 1
            return True
        return False

    def signed_int(self) -> int:
        sign = -1 if self.accept("-") else 1
        return sign * int(self.take("int")[1])


def parse_padic(text: str, ctx: PadicContext) -> PadicNumber:
    """Read an integer, a fraction ``a/b``, or a ``series``/``val-unit`` string.

    Series terms are ``a``, ``a*p`` or ``a*p^k`` joined by ``+``, where ``p``
    must be the context prime.  Whitespace is ignored.
    """
    r = _Reader(text)
    first = r.signed_int()
    if r.accept("/"):
        tok = r.peek()
        den = r.signed_int()
        if den == 0:
            raise PadicSyntaxError("zero denominator", tok[2])
        r.take("end")
        return from_rational(Fraction(first, den), ctx)
    total = Fraction(0)
    coeff = first
    while True:
        exponent = 0
        if r.accept("*"):
            tok = r.take("int")
            if int(tok[1]) != ctx.p:
                raise PadicSyntaxError(f"base {tok[1]} does not match p={ctx.p}", tok[2])
            exponent = r.signed_int() if r.accept("^") else 1
        total += coeff * Fraction(ctx.p) ** exponent
        if r.peek()[0] == "end":
            break
        r.take("op", "+")
        coeff = r.signed_int()
    return from_rational(total, ctx)
