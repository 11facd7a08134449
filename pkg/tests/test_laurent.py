from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from jonesq.laurent import (
    DELTA,
    ONE,
    Q,
    ZERO,
    GaussianInt,
    LaurentQ,
    ParseError,
    from_terms,
    parse,
    quantum_integer,
    to_string,
    unit_pow,
)

coeffs = st.integers(-5, 5)
polys = st.dictionaries(st.integers(-12, 12), coeffs, max_size=5).map(LaurentQ)
gauss = st.builds(GaussianInt, coeffs, coeffs)
gpolys = st.dictionaries(st.integers(-8, 8), gauss, max_size=4).map(lambda t: LaurentQ(t, gaussian=True))
any_poly = st.one_of(polys, gpolys)

RING = settings(max_examples=1000, deadline=None)


@RING
@given(any_poly, any_poly, any_poly)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@RING
@given(polys)
def test_string_round_trip(a):
    assert parse(to_string(a)) == a


@RING
@given(gpolys)
def test_gaussian_round_trip(a):
    assert parse(to_string(a)) == a


@RING
@given(polys, polys)
def test_bar_is_ring_map(a, b):
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()
    assert a.bar().bar() == a


monic = st.tuples(polys, st.integers(-12, 12), st.sampled_from([1, -1])).map(
    lambda t: LaurentQ({**{e: c for e, c in t[0].terms.items() if e < t[1]}, t[1]: t[2]})
)


@RING
@given(polys, monic)
def test_divexact_inverts_multiplication(a, b):
    assert (a * b).divexact(b) == a


def test_divexact_needs_unit_leading_coefficient():
    with pytest.raises(ArithmeticError):
        LaurentQ.const(4).divexact(LaurentQ.const(2))


@given(st.integers(-20, 20), st.sampled_from([1, -1]), st.integers(-3, 3))
def test_unit_pow_matches_repeated_multiplication(exp, sign, k):
    base = LaurentQ({exp: sign})
    assert unit_pow(sign, Fraction(exp, 4), k) == base ** k


def test_unknot_value_text():
    assert str(DELTA) == "-q - q^-1"
    assert parse("-q - q^-1") == DELTA


@pytest.mark.parametrize(
    "poly, text",
    [
        (ZERO, "0"),
        (ONE, "1"),
        (Q, "q"),
        (LaurentQ.qpow("3/2"), "q^(3/2)"),
        (LaurentQ.monomial(2, 2), "2*q^2"),
        (LaurentQ.monomial(-1, -1), "-q^-1"),
        (LaurentQ.qpow("-1/4"), "q^(-1/4)"),
        (LaurentQ.monomial(GaussianInt(0, 1), "3/4"), "i*q^(3/4)"),
        (LaurentQ.monomial(GaussianInt(1, 2), 0), "(1+2i)"),
    ],
)
def test_to_string_forms(poly, text):
    assert to_string(poly) == text
    assert parse(text) == poly


def test_parse_accepts_juxtaposed_coefficients():
    assert parse("2q^2 - 3") == parse("2*q^2 - 3")
    assert parse("q^-2 + 2q^(1/2)") == LaurentQ({-8: 1, 2: 2})


@pytest.mark.parametrize("text", ["", "q^", "q^(1/3)", "3 + + q", "x", "q^(1/2"])
def test_parse_errors(text):
    with pytest.raises((ParseError, ValueError)):
        parse(text)


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse("q + x")
    assert info.value.pos == 4


def test_quantum_integers():
    assert quantum_integer(0) == ZERO
    assert quantum_integer(1) == ONE
    assert quantum_integer(2) == Q + Q ** -1
    for n in range(1, 10):
        assert quantum_integer(n) * (Q - Q ** -1) == Q ** n - Q ** -n
        assert quantum_integer(n).at_one() == n
        assert quantum_integer(n).bar() == quantum_integer(n)
    with pytest.raises(ValueError):
        quantum_integer(-1)


def test_units_and_inverses():
    m = LaurentQ.monomial(-1, "5/4")
    assert m.is_unit()
    assert m * m.unit_inverse() == ONE
    assert m ** -3 * m ** 3 == ONE
    assert not DELTA.is_unit()
    with pytest.raises(ArithmeticError):
        DELTA ** -1
    i = LaurentQ.const(GaussianInt(0, 1))
    assert i.is_unit() and i * i.unit_inverse() == ONE
    assert not LaurentQ.const(2).is_unit()


def test_divexact_rejects_non_multiples():
    with pytest.raises(ArithmeticError):
        (Q + 1).divexact(Q + 2)
    with pytest.raises(ZeroDivisionError):
        Q.divexact(ZERO)


def test_gaussian_promotion():
    i = LaurentQ.const(GaussianInt(0, 1))
    assert (i * i) == -1
    assert (Q + i).gaussian
    assert not (Q + 1).gaussian
    assert LaurentQ({0: 3}, gaussian=True) == 3


def test_equality_and_hash_ignore_mode():
    assert LaurentQ({4: 1}) == LaurentQ({4: GaussianInt(1, 0)}, gaussian=True)
    assert hash(LaurentQ({4: 1})) == hash(LaurentQ({4: GaussianInt(1, 0)}, gaussian=True))
    assert ZERO == 0 and ONE == 1


def test_from_terms_and_items():
    p = from_terms([("1/2", 1), (-1, 2), ("1/2", 1)])
    assert p == LaurentQ({2: 2, -4: 2})
    assert p.items() == [(Fraction(1, 2), 2), (Fraction(-1), 2)]
    with pytest.raises(ValueError):
        from_terms([("1/3", 1)])


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        LaurentQ({0: 1.5})
