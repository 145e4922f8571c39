"""Integer polynomials and Newton/Hensel root lifting over Z_p."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import arith
from .convert import _Reader, from_integer
from .core import PadicContext, PadicNumber, canonicalize
from .errors import NoConvergence, PadicSyntaxError, SeedNotRoot, SingularSeed


@dataclass(frozen=True)
class IntPolynomial:
    """Coefficients indexed by degree; no trailing zeros (``()`` is the zero polynomial)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def parse(cls, text: str) -> IntPolynomial:
        return parse_poly(text)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        if isinstance(x, PadicNumber):
            return poly_eval(self, x)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else "x" if k == 1 else f"x^{k}"
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {sign} {body}" for sign, body in terms[1:])


def parse_poly(text: str) -> IntPolynomial:
    """Parse sums of ``c``, ``c*x``, ``c*x^k``, ``x^k`` terms such as ``"x^3-2"``."""
    r = _Reader(text)
    coeffs: dict[int, int] = {}
    sign = -1 if r.accept("-") else 1
    while True:
        tok = r.peek()
        if tok[0] == "int":
            c = int(r.take("int")[1])
            has_x = r.accept("*")
            if has_x:
                r.take("name", "x")
        elif tok[:2] == ("name", "x"):
            r.take("name", "x")
            c, has_x = 1, True
        else:
            raise PadicSyntaxError(f"expected a term, found {tok[1] or 'end of input'!r}", tok[2])
        k = 0
        if has_x:
            k = int(r.take("int")[1]) if r.accept("^") else 1
        coeffs[k] = coeffs.get(k, 0) + sign * c
        if r.peek()[0] == "end":
            break
        if r.accept("+"):
            sign = 1
        else:
            r.take("op", "-")
            sign = -1
    degree = max(coeffs)
    return IntPolynomial(tuple(coeffs.get(k, 0) for k in range(degree + 1)))


def poly_derivative(f: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(tuple(k * c for k, c in enumerate(f.coeffs))[1:])


def poly_eval(f: IntPolynomial, x: PadicNumber) -> PadicNumber:
    """Horner evaluation on the exact lift of ``x``, canonicalized once at the end.

    Rounding after every step would let cancellation between steps leave
    nonzero noise in ``f(root)``; a single reduction makes an exact residual
    vanish.
    """
    ctx = x.ctx
    if not f.coeffs:
        return ctx.zero()
    if x.u == 0:
        return from_integer(f.coeffs[0], ctx)
    p, mod = ctx.p, ctx.modulus
    u = x.u - mod if 2 * x.u > mod else x.u
    if x.v >= 0:
        acc = 0
        for c in reversed(f.coeffs):
            acc = acc * u * p**x.v + c
        return canonicalize(acc, 0, ctx)
    # x = u / p**s: scale by p**(s*d) to stay in the integers
    s, d = -x.v, f.degree
    acc = 0
    for k, c in enumerate(reversed(f.coeffs)):
        acc = acc * u + c * p ** (s * k)
    return canonicalize(acc, -s * d, ctx)


@dataclass(frozen=True)
class HenselResult:
    root: PadicNumber
    iterations: int
    trace: tuple[PadicNumber, ...]


def max_iterations(precision: int) -> int:
    return math.ceil(math.log2(precision)) + 2


def hensel_lift(f: IntPolynomial, seed: int, ctx: PadicContext) -> HenselResult:
    """Iterate ``a -> a - f(a)/f'(a)`` from ``seed`` until it stops moving."""
    p = ctx.p
    df = poly_derivative(f)
    if f(seed) % p:
        raise SeedNotRoot(f"f({seed}) = {f(seed)} is not divisible by {p}")
    if df(seed) % p == 0:
        raise SingularSeed(f"f'({seed}) = {df(seed)} is divisible by {p}")
    alpha = from_integer(seed, ctx)
    trace = [alpha]
    cap = max_iterations(ctx.precision)
    for step in range(1, cap + 1):
        nxt = arith.sub(alpha, arith.div(poly_eval(f, alpha), poly_eval(df, alpha)))
        trace.append(nxt)
        if arith.equal(nxt, alpha):
            return HenselResult(nxt, step, tuple(trace))
        alpha = nxt
    raise NoConvergence(f"no fixed point after {cap} Newton steps")
