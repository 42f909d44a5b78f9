"""Ring axioms, canonical printing, and exactness of the polynomial engine."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from toricsing.errors import AlignmentError
from toricsing.exactalg import MultiPoly, aligned, poly_sum
from toricsing.catalog import parse_polynomial

VARS = ("a", "b", "c", "x", "y")


def coeffs():
    return st.builds(Fraction,
                     st.integers(min_value=-50, max_value=50),
                     st.integers(min_value=1, max_value=12))


def exponents(nvars):
    return st.tuples(*([st.integers(min_value=0, max_value=4)] * nvars))


@st.composite
def polys(draw, max_vars=5):
    nvars = draw(st.integers(min_value=0, max_value=max_vars))
    table = VARS[:nvars]
    terms = draw(st.dictionaries(exponents(nvars), coeffs(), max_size=6))
    return MultiPoly(table, terms)


@settings(max_examples=200, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    p, q, r = aligned(p, q, r)
    assert ((p + q) + r).terms == (p + (q + r)).terms
    assert (p * q).terms == (q * p).terms
    assert (p * (q + r)).terms == (p * q + p * r).terms


@settings(max_examples=200, deadline=None)
@given(polys())
def test_canonical_string_round_trips(p):
    if not p.vars:
        return
    text = p.canonical_string()
    assert parse_polynomial(text, p.vars) == p


def test_rational_exactness():
    for num, den in [(3, 7), (-10, 4), (123456789, 987654321)]:
        q = Fraction(num, den)
        assert q * (1 / q) == 1
    # lowest terms and positive denominator come with fractions.Fraction
    assert Fraction(-4, -8) == Fraction(1, 2)


def test_binomial_expansion():
    table = ("d1", "d2")
    d1 = MultiPoly.variable("d1", table)
    d2 = MultiPoly.variable("d2", table)
    square = (d1 + d2) ** 2
    assert square == MultiPoly(table, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert square.canonical_string() == "d1^2 + 2*d1*d2 + d2^2"


def test_multiplication_by_zero_annihilates():
    table = ("x", "y")
    p = MultiPoly(table, {(2, 0): 3, (0, 1): Fraction(-1, 2)})
    assert (p * MultiPoly.zero(table)).is_zero
    assert (p * 0).is_zero


def test_difference_of_squares():
    table = ("H", "E")
    H = MultiPoly.variable("H", table)
    E = MultiPoly.variable("E", table)
    assert (H - E) * (H + E) == H ** 2 - E ** 2


def test_canonical_string_examples():
    table = ("d1", "d2")
    p = MultiPoly(table, {(2, 0): 1, (0, 2): -1, (1, 0): 3, (0, 1): 1, (0, 0): 4})
    assert p.canonical_string() == "d1^2 - d2^2 + 3*d1 + d2 + 4"
    assert MultiPoly.zero(table).canonical_string() == "0"
    assert MultiPoly.const(Fraction(5, 2)).canonical_string() == "5/2"


def test_canonical_string_unit_and_fraction_coefficients():
    table = ("x",)
    p = MultiPoly(table, {(1,): -1, (0,): Fraction(-5, 2)})
    assert p.canonical_string() == "-x - 5/2"
    q = MultiPoly(table, {(2,): Fraction(5, 2)})
    assert q.canonical_string() == "5/2*x^2"


def test_alignment_error_and_helper():
    p = MultiPoly(("x",), {(1,): 1})
    q = MultiPoly(("y",), {(1,): 1})
    with pytest.raises(AlignmentError):
        _ = p + q
    a, b = aligned(p, q)
    assert a.vars == b.vars == ("x", "y")
    assert (a + b).canonical_string() == "x + y"


def test_power_validation():
    p = MultiPoly(("x",), {(1,): 1})
    assert p ** 0 == 1
    with pytest.raises(ValueError):
        _ = p ** -1


def test_substitute_and_evaluate():
    table = ("x", "y")
    p = parse_polynomial("x^2*y - 3*y + 1", table)
    assert p.evaluate({"x": 2, "y": Fraction(1, 2)}) == Fraction(2 - Fraction(3, 2) + 1)
    u = MultiPoly(("u", "v"), {(1, 0): 1, (0, 1): 1})
    q = p.substitute({"x": u})
    assert q.evaluate({"y": 1, "u": 1, "v": 1}) == p.evaluate({"x": 2, "y": 1})


def test_derivative():
    p = parse_polynomial("x^3 + x*y^2 - 4", ("x", "y"))
    assert p.derivative("x") == parse_polynomial("3*x^2 + y^2", ("x", "y"))
    assert p.derivative("y") == parse_polynomial("2*x*y", ("x", "y"))


def test_constant_value_guards():
    p = MultiPoly(("x",), {(1,): 1})
    with pytest.raises(ValueError):
        p.constant_value()
    assert MultiPoly.zero(("x",)).constant_value() == 0


def test_poly_sum_aligns_tables():
    p = MultiPoly(("x",), {(1,): 1})
    q = MultiPoly(("y",), {(1,): 2})
    assert poly_sum([p, q, 5]).canonical_string() == "x + 2*y + 5"
    assert poly_sum([]) == 0


def test_immutability():
    p = MultiPoly(("x",), {(1,): 1})
    with pytest.raises(AttributeError):
        p.vars = ("y",)
