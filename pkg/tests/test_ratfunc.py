from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ellspec.intpoly import IntPoly
from ellspec.ratfunc import RatFunc

T = IntPoly.monomial(1, 1)
t = RatFunc(T)

small_polys = st.builds(IntPoly, st.lists(st.integers(-5, 5), max_size=4))
nonzero = small_polys.filter(lambda p: not p.is_zero)
ratfuncs = st.builds(RatFunc, small_polys, nonzero)
nonzero_ratfuncs = ratfuncs.filter(lambda f: not f.is_zero)


def test_canonical_form():
    f = RatFunc(T**2 - 1, T - 1)
    assert f.num == T + 1 and f.den == IntPoly.const(1)
    g = RatFunc(T, -2 * T)  # denominator lc made positive
    assert g.num == IntPoly.const(-1) and g.den == IntPoly.const(2)
    assert RatFunc(2 * T + 2, 4) == RatFunc(T + 1, 2)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        RatFunc(T, IntPoly())


def test_coercion():
    assert RatFunc(Fraction(3, 4)) == RatFunc(3, 4)
    assert t + 1 == RatFunc(T + 1)
    assert 1 - t == RatFunc(1 - T)
    assert Fraction(1, 2) * t == RatFunc(T, 2)
    assert 6 / (t + 1) == RatFunc(IntPoly.const(6), T + 1)


@given(ratfuncs, ratfuncs, ratfuncs)
def test_field_axioms_spot(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f - f == RatFunc(0)


@given(nonzero_ratfuncs)
def test_multiplicative_inverse(f):
    assert f * (1 / f) == RatFunc(1)


def test_evaluation_and_poles():
    f = RatFunc(T + 1, T - 2)
    assert f(Fraction(3)) == 4
    assert f(2) is None  # pole
    g = RatFunc(T**2 - 4, T - 2)  # reduces to t + 2, no pole at 2
    assert g(2) == 4


def test_map_degree():
    assert RatFunc(T**3 + 1, T).map_degree() == 3
    assert RatFunc(T, T**5 + T + 1).map_degree() == 5
    assert RatFunc(7).map_degree() == 0


def test_square_detection():
    f = RatFunc(4 * (T + 1) ** 2, 9 * T**2)
    assert f.is_square()
    assert f.sqrt() == RatFunc(2 * (T + 1), 3 * T)
    assert not RatFunc(T).is_square()
    assert not RatFunc(-(T**2)).is_square()
    assert RatFunc(0).is_square()


@given(nonzero_ratfuncs)
def test_square_roundtrip(f):
    s = (f * f).sqrt()
    assert s is not None and s * s == f * f


def test_as_poly_and_as_fraction():
    assert RatFunc(T**2 - 1).as_poly() == T**2 - 1
    with pytest.raises(ValueError):
        RatFunc(1, T).as_poly()
    assert RatFunc(6, 4).as_fraction() == Fraction(3, 2)
    with pytest.raises(ValueError):
        t.as_fraction()


def test_constants():
    assert RatFunc(5, 3).is_constant
    assert not RatFunc(T, 3).is_constant
    assert RatFunc(0).is_zero
