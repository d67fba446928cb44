import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from csmlap.ring import (ContextMismatch, DivisionError, ModInt, ParseError, Poly, RingContext,
                         RingError, eval_poly, format_poly, is_prime, parse_poly, ring_arith)

Z = RingContext.integers()
Q = RingContext.rationals()
Z7 = RingContext.mod(7)
Z6 = RingContext.mod(6)
ZXY = RingContext.poly(["x", "y"])


def rand_poly(rng, names=("x", "y"), nterms=4, maxdeg=3):
    return Poly(names, {tuple(rng.randint(0, maxdeg) for _ in names): rng.randint(-5, 5)
                        for _ in range(rng.randint(0, nterms))})


def rand_elem(ctx, rng):
    if ctx.kind == "integer":
        return rng.randint(-10**12, 10**12)
    if ctx.kind == "rational":
        return Fraction(rng.randint(-50, 50), rng.randint(1, 50))
    if ctx.kind == "mod":
        return ModInt(rng.randrange(ctx.modulus), ctx.modulus)
    return rand_poly(rng)


def test_examples():
    assert ring_arith(Z, "add", 2, 3) == 5
    x, y = ZXY.var("x"), ZXY.var("y")
    assert ring_arith(ZXY, "mul", x + 1, x - 1) == parse_poly("x^2 - 1", ZXY.names)
    assert ring_arith(Z7, "add", ModInt(5, 7), ModInt(5, 7)) == ModInt(3, 7)
    assert ring_arith(Z, "neg", 4) == -4
    assert ring_arith(Z, "sub", 4, 9) == -5


@pytest.mark.parametrize("ctx", [Z, Q, Z7, Z6, ZXY], ids=lambda c: c.spec)
def test_ring_axioms_random(ctx):
    rng = random.Random(7)
    zero = ctx.zero
    for _ in range(1000):
        a, b, c = (rand_elem(ctx, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a + b == b + a
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == zero
        assert a * ctx.one == a


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        ring_arith(Z, "add", 1, Fraction(1, 2))
    with pytest.raises(ContextMismatch):
        ModInt(1, 7) + ModInt(1, 5)
    with pytest.raises(ContextMismatch):
        Poly(("x",), {(1,): 1}) + Poly(("y",), {(1,): 1})
    with pytest.raises(ContextMismatch):
        Poly(("x",), {(1,): 1}) * ModInt(1, 5)
    with pytest.raises(ContextMismatch):
        ring_arith(Z7, "mul", ModInt(1, 7), 3)


def test_exact_div_examples():
    assert Z.exact_div(-6, 3) == -2
    x = ZXY.var("x")
    assert ZXY.exact_div(x * x - 1, x - 1) == x + 1
    with pytest.raises(DivisionError):
        Z.exact_div(5, 2)
    with pytest.raises(DivisionError):
        Z.exact_div(5, 0)
    with pytest.raises(DivisionError):
        Z6.exact_div(ModInt(2, 6), ModInt(1, 6))
    assert Z7.exact_div(ModInt(3, 7), ModInt(5, 7)) * ModInt(5, 7) == ModInt(3, 7)
    assert Q.exact_div(Fraction(1, 2), Fraction(3)) == Fraction(1, 6)
    with pytest.raises(DivisionError):
        ZXY.exact_div(x * x + 1, x - 1)
    with pytest.raises(DivisionError):
        ZXY.exact_div(2 * x, 3 * x)


@pytest.mark.parametrize("ctx", [Z, Q, Z7, ZXY], ids=lambda c: c.spec)
def test_exact_div_roundtrip(ctx):
    rng = random.Random(11)
    for _ in range(300):
        a, b = rand_elem(ctx, rng), rand_elem(ctx, rng)
        if not b:
            continue
        assert ctx.exact_div(a * b, b) == a


def test_eval_poly():
    xy = RingContext.poly(["x", "y"])
    assert eval_poly(parse_poly("x*y + 1", xy.names), {"x": 2, "y": 3}) == 7
    assert eval_poly(Poly(xy.names), {}) == 0
    names = ["a11", "a12", "a21", "a22"]
    p = parse_poly("a11*a22 - a21*a12", names)
    assert eval_poly(p, {"a11": 1, "a12": 2, "a21": 3, "a22": 4}) == -2
    with pytest.raises(RingError):
        eval_poly(parse_poly("x*y", xy.names), {"x": 1})
    # unbound names that do not occur are fine
    assert eval_poly(parse_poly("x + 2", xy.names), {"x": 1}) == 3


def test_poly_format_and_order():
    p = parse_poly("1 + y + x^2*y - 3*x", ("x", "y"))
    assert format_poly(p) == "x^2*y - 3*x + y + 1"
    assert str(Poly(("x",))) == "0"
    assert str(parse_poly("-x", ("x",))) == "-x"


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_poly("z", ("x",))
    with pytest.raises(ParseError):
        parse_poly("x^a", ("x",))
    with pytest.raises(ParseError):
        parse_poly("2x", ("x",))
    with pytest.raises(ParseError):
        Z.parse("1.5")
    with pytest.raises(ParseError):
        Q.parse("1/0")
    with pytest.raises(ParseError):
        RingContext.from_spec("float")


def test_literals():
    assert Z.parse("-12") == -12
    assert Q.parse("6/-4") == Fraction(-3, 2)
    assert Q.parse("3") == Fraction(3)
    assert Z7.parse("10") == ModInt(3, 7)
    assert Z7.parse("-1") == ModInt(6, 7)
    assert RingContext.from_spec("poly:x,y") == ZXY
    assert RingContext.from_spec("mod:7") == Z7


@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                       st.integers(-10**6, 10**6), max_size=8))
def test_poly_roundtrip(terms):
    p = Poly(("x", "y"), terms)
    assert parse_poly(str(p), ("x", "y")) == p
    assert all(c != 0 for c in p.terms.values())


@given(st.integers(), st.integers())
def test_modint_matches_int(a, b):
    m = 13
    assert (ModInt(a, m) * ModInt(b, m)).value == (a * b) % m
    assert (ModInt(a, m) - ModInt(b, m)).value == (a - b) % m


def test_is_prime():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert Z7.is_integral_domain and not Z6.is_integral_domain


def test_context_validation():
    with pytest.raises(RingError):
        RingContext.mod(1)
    with pytest.raises(RingError):
        RingContext.poly(["x", "x"])
    with pytest.raises(RingError):
        RingContext("float")
