"""``padic`` command line: evaluate expressions, convert values, run Hensel lifting.

Exit codes: 0 on success, 2 for usage or parse errors, 3 for domain errors
(non-squares, division by zero, arguments outside a series' disc, bad seeds).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import analytic, arith
from .convert import _Reader, format_padic, from_rational, parse_padic, to_integer
from .core import DEFAULT_PRECISION, PadicContext, PadicNumber, PrintMode, abs_p, make_context
from .errors import (DivisionByZero, NegativeValuation, NotASquare, OutsideDomain, PadicError,
                     PadicSyntaxError, PrecisionError, PrimalityError, SeedNotRoot, SingularSeed)
from .hensel import hensel_lift, parse_poly

EXIT_OK, EXIT_FAILURE, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

_DOMAIN_ERRORS = (NotASquare, OutsideDomain, DivisionByZero, NegativeValuation,
                  SeedNotRoot, SingularSeed)
_USAGE_ERRORS = (PadicSyntaxError, PrimalityError, PrecisionError)


@dataclass(frozen=True)
class CliConfig:
    p: int
    prec: int = DEFAULT_PRECISION
    format: PrintMode = PrintMode.SERIES

    @property
    def ctx(self) -> PadicContext:
        return make_context(self.p, self.prec, self.format)


def _valuation_of(x: PadicNumber) -> PadicNumber:
    if x.u == 0:
        raise OutsideDomain("valuation of zero is infinite")
    return from_rational(Fraction(x.v), x.ctx)


FUNCTIONS = {
    "sqrt": analytic.sqrt,
    "exp": analytic.exp,
    "log": analytic.log,
    "teich": analytic.teichmuller,
    "val": _valuation_of,
    "absval": lambda x: from_rational(abs_p(x), x.ctx),
}


class ExpressionParser:
    """Recursive descent over ``+ - * / ^``, unary minus, parentheses and calls.

    ``^`` binds tighter than unary minus and takes an integer literal exponent,
    optionally signed.
    """

    def __init__(self, text: str, ctx: PadicContext):
        self.r = _Reader(text)
        self.ctx = ctx

    def parse(self) -> PadicNumber:
        value = self.expr()
        self.r.take("end")
        return value

    def expr(self):
        value = self.term()
        while True:
            if self.r.accept("+"):
                value = arith.add(value, self.term())
            elif self.r.accept("-"):
                value = arith.sub(value, self.term())
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            if self.r.accept("*"):
                value = arith.mul(value, self.unary())
            elif self.r.accept("/"):
                value = arith.div(value, self.unary())
            else:
                return value

    def unary(self):
        if self.r.accept("-"):
            return arith.neg(self.unary())
        if self.r.accept("+"):
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.r.accept("^"):
            sign = -1 if self.r.accept("-") else 1
            if sign == 1:
                self.r.accept("+")
            return arith.pow_int(base, sign * int(self.r.take("int")[1]))
        return base

    def atom(self):
        kind, text, pos = self.r.peek()
        if kind == "int":
            self.r.take("int")
            # literals follow parse_padic: exact rationals at relative precision
            return from_rational(Fraction(int(text)), self.ctx)
        if kind == "name":
            if text not in FUNCTIONS:
                raise PadicSyntaxError(f"unknown function {text!r}", pos)
            self.r.take("name")
            self.r.take("op", "(")
            arg = self.expr()
            self.r.take("op", ")")
            return FUNCTIONS[text](arg)
        if self.r.accept("("):
            value = self.expr()
            self.r.take("op", ")")
            return value
        raise PadicSyntaxError(f"unexpected {text or 'end of input'!r}", pos)


def evaluate(expr: str, ctx: PadicContext) -> PadicNumber:
    return ExpressionParser(expr, ctx).parse()


def cmd_eval(expr: str, config: CliConfig) -> list[str]:
    ctx = config.ctx
    return [format_padic(evaluate(expr, ctx)), str(ctx)]


def cmd_hensel(poly: str, seed: int, config: CliConfig) -> list[str]:
    result = hensel_lift(parse_poly(poly), seed, config.ctx)
    return [format_padic(result.root), f"iterations: {result.iterations}"]


def cmd_convert(value: str, config: CliConfig, to: str) -> list[str]:
    x = parse_padic(value, config.ctx)
    if to == "integer":
        return [str(to_integer(x))]
    return [format_padic(x, to)]


def _common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("-p", "--prime", type=int, required=True, help="the prime p")
    parent.add_argument("--prec", type=int, default=DEFAULT_PRECISION,
                        help="unit digits kept (default %(default)s)")
    parent.add_argument("--format", default=PrintMode.SERIES.value,
                        choices=[m.value for m in PrintMode], help="output format")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="padic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="evaluate an expression in Q_p")
    ev.add_argument("expr")

    hs = sub.add_parser("hensel", parents=[common], help="lift a root of an integer polynomial")
    hs.add_argument("poly", help='polynomial such as "x^3-2"')
    hs.add_argument("--seed", type=int, required=True, help="root modulo p to start from")

    cv = sub.add_parser("convert", parents=[common], help="re-render a value")
    cv.add_argument("value")
    cv.add_argument("--to", choices=[m.value for m in PrintMode] + ["integer"],
                    help="target format (default: --format)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        config = CliConfig(args.prime, args.prec, PrintMode(args.format))
        config.ctx
        if args.command == "eval":
            lines = cmd_eval(args.expr, config)
        elif args.command == "hensel":
            lines = cmd_hensel(args.poly, args.seed, config)
        else:
            lines = cmd_convert(args.value, config, args.to or args.format)
    except _USAGE_ERRORS as exc:
        print(f"padic: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _DOMAIN_ERRORS as exc:
        print(f"padic: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PadicError as exc:
        print(f"padic: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    for line in lines:
        print(line)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
