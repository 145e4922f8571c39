import pytest
from hypothesis import assume, given, strategies as st

from padic import (IntPolynomial, PadicSyntaxError, SeedNotRoot, SingularSeed, arith,
                   format_padic, from_integer, hensel_lift, make_context, parse_poly,
                   poly_derivative, poly_eval, pow_int, valuation)
from padic.hensel import max_iterations

from helpers import CUBE_ROOT_OF_TWO
from strategies import PRIMES, padics

CUBE = IntPolynomial((-2, 0, 0, 1))


def test_poly_eval_examples():
    ctx = make_context(5)
    r = poly_eval(CUBE, from_integer(3, ctx))
    assert (r.u, r.v) == (1, 2)
    assert poly_eval(IntPolynomial(()), from_integer(7, ctx)) == ctx.zero()
    x = from_integer(11, ctx)
    assert poly_eval(IntPolynomial((0, 1)), x) == x


def test_poly_derivative_examples():
    assert poly_derivative(CUBE) == IntPolynomial((0, 0, 3))
    assert poly_derivative(IntPolynomial((7,))) == IntPolynomial(())
    assert poly_derivative(IntPolynomial((0, 1))) == IntPolynomial((1,))
    assert poly_derivative(CUBE)(3) == 27


@pytest.mark.parametrize("text, coeffs", [
    ("x^3-2", (-2, 0, 0, 1)),
    ("x^2 - 6", (-6, 0, 1)),
    ("-x^2 + 3*x - 7", (-7, 3, -1)),
    ("2*x^4 + x", (0, 1, 0, 0, 2)),
    ("5", (5,)),
    ("x - x", ()),
    ("3*x^2 + 2*x^2", (0, 0, 5)),
])
def test_parse_poly(text, coeffs):
    f = parse_poly(text)
    assert f.coeffs == coeffs
    assert parse_poly(str(f)) == f


@pytest.mark.parametrize("text", ["", "x^", "3x", "x^3-", "2*y", "x**2", "x^-1"])
def test_parse_poly_errors(text):
    with pytest.raises(PadicSyntaxError):
        parse_poly(text)


def test_cube_root_of_two():
    ctx = make_context(5, 20)
    result = hensel_lift(CUBE, 3, ctx)
    assert format_padic(result.root, "series") == CUBE_ROOT_OF_TWO
    assert pow_int(result.root, 3) == from_integer(2, ctx)
    assert result.iterations <= max_iterations(20)


def test_small_square_root_example():
    result = hensel_lift(parse_poly("x^2-6"), 1, make_context(5, 2))
    assert (result.root.u, result.root.v) == (16, 0)


def test_seed_checks():
    with pytest.raises(SingularSeed):
        hensel_lift(parse_poly("x^2-1"), 1, make_context(2))
    with pytest.raises(SeedNotRoot):
        hensel_lift(CUBE, 1, make_context(5))


def test_trace_is_newton_sequence():
    ctx = make_context(5, 20)
    result = hensel_lift(CUBE, 3, ctx)
    trace = result.trace
    assert trace[0] == from_integer(3, ctx)
    assert trace[-1] == trace[-2] == result.root
    assert len(trace) == result.iterations + 1
    df = poly_derivative(CUBE)
    for a, b in zip(trace, trace[1:]):
        step = arith.div(poly_eval(CUBE, a), poly_eval(df, a))
        assert b == arith.sub(a, step)


def test_residual_valuation_grows_quadratically():
    ctx = make_context(5, 20)
    trace = hensel_lift(CUBE, 3, ctx).trace
    vals = [valuation(poly_eval(CUBE, a)) for a in trace]
    finite = [v for v in vals if v != float("inf")]
    assert finite == sorted(set(finite))
    for a, b in zip(finite, finite[1:]):
        assert b >= 2 * a
    assert vals[-1] == float("inf")


def test_root_with_positive_valuation():
    ctx = make_context(7, 10)
    f = parse_poly("x^2 + x - 49")
    root = hensel_lift(f, 0, ctx).root
    assert poly_eval(f, root) == ctx.zero()
    assert root.v == 2


@given(st.sampled_from(PRIMES), st.lists(st.integers(-50, 50), min_size=2, max_size=6),
       st.integers(0, 10), st.integers(1, 30))
def test_lifted_roots(p, coeffs, seed, n):
    f = IntPolynomial(tuple(coeffs))
    # shift the constant term so that seed is a root mod p
    f = IntPolynomial((coeffs[0] - f(seed) % p, *coeffs[1:]))
    df = poly_derivative(f)
    assume(f.degree >= 1 and df(seed) % p)
    ctx = make_context(p, n)
    result = hensel_lift(f, seed, ctx)
    assert poly_eval(f, result.root) == ctx.zero()
    assert valuation(arith.sub(result.root, from_integer(seed, ctx))) >= 1


@given(padics(min_val=0, max_val=0, nonzero=True))
def test_square_roots_by_lifting(x):
    p = x.p
    assume(p != 2)
    square = arith.mul(x, x)
    f = IntPolynomial((-(square.u), 0, 1))
    root = hensel_lift(f, x.u % p, x.ctx).root
    assert root == x
