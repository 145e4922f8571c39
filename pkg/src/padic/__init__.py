"""Fixed-precision p-adic numbers, Hensel lifting and a small calculator."""
from .analytic import exp, log, sqrt, teichmuller
from .arith import add, div, equal, inv, is_zero, mul, neg, pow_int, sub
from .convert import (format_padic, from_integer, from_rational, parse_padic,
                      to_integer, to_rational)
from .core import (DEFAULT_PRECISION, Expansion, PadicContext, PadicNumber, PrintMode,
                   abs_p, canonicalize, digits, make_context, valuation)
from .errors import (ContextMismatch, DivisionByZero, NegativeValuation, NoConvergence,
                     NotASquare, OutsideDomain, PadicError, PadicSyntaxError, PrecisionError,
                     PrimalityError, SeedNotRoot, SingularSeed)
from .hensel import HenselResult, IntPolynomial, hensel_lift, parse_poly, poly_derivative, poly_eval

__all__ = [
    "DEFAULT_PRECISION", "ContextMismatch", "DivisionByZero", "Expansion", "HenselResult",
    "IntPolynomial", "NegativeValuation", "NoConvergence", "NotASquare", "OutsideDomain",
    "PadicContext", "PadicError", "PadicNumber", "PadicSyntaxError", "PrecisionError",
    "PrimalityError", "PrintMode", "SeedNotRoot", "SingularSeed", "abs_p", "add",
    "canonicalize", "digits", "div", "equal", "exp", "format_padic", "from_integer",
    "from_rational", "hensel_lift", "inv", "is_zero", "log", "make_context", "mul", "neg",
    "parse_padic", "parse_poly", "poly_derivative", "poly_eval", "pow_int", "sqrt", "sub",
    "teichmuller", "to_integer", "to_rational", "valuation",
]
