import random
from fractions import Fraction

import pytest

from config import Config
from errors import EnumerationLimitError, PoleError, SpecializationError
from scalars import (DELTA, LaurentPoly, S, Scalar, V, X, Z, h_expand, quantum_factorial, quantum_int,
                     scalar_monomial, specialize_slN, to_rational)
from utils import parse_expression


def random_laurent(rng, terms=3, spread=2):
    monomials = {}
    for _ in range(rng.randint(1, terms)):
        exponents = tuple(rng.randint(-spread, spread) for _ in range(3))
        monomials[exponents] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
    return LaurentPoly.from_terms(monomials)


def random_scalar(rng):
    den = random_laurent(rng, terms=2) + LaurentPoly.monomial((0, 0, 3), 5)
    return Scalar(random_laurent(rng), den)


def test_quantum_int():
    assert str(quantum_int(2)) == "s + s^-1"
    assert quantum_int(1) == 1
    assert quantum_int(0).is_zero()
    assert str(quantum_int(3)) == "s^2 + 1 + s^-2"
    with pytest.raises(ValueError):
        quantum_int(-1)


def test_quantum_factorial():
    assert quantum_factorial(0) == 1
    assert quantum_factorial(3) == quantum_int(2) * quantum_int(3)


def test_laurent_arithmetic():
    a = LaurentPoly.monomial((1, 0, -1)) + 2
    b = LaurentPoly.monomial((0, -2, 1), -1) + LaurentPoly.monomial((0, 0, 3))
    c = LaurentPoly.monomial((-1, 1, 0), Fraction(1, 2))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert LaurentPoly.monomial((2, 0, 0), 3) ** -1 == LaurentPoly.monomial((-2, 0, 0), Fraction(1, 3))


def test_laurent_inverse_needs_monomial():
    with pytest.raises(ValueError):
        (LaurentPoly.monomial((1, 0, 0)) + 1) ** -1


def test_laurent_json():
    poly = LaurentPoly.monomial((1, -1, 0), Fraction(-3, 2)) + 1
    assert poly.to_json() == [[1, -1, 0, "-3/2"], [0, 0, 0, "1"]]
    assert LaurentPoly.from_json(poly.to_json()) == poly


def test_scalar_reduction():
    value = (S ** 2 - 1) / (S - 1)
    assert value.is_laurent()
    assert value == S + 1
    assert DELTA * Z == V ** -1 - V
    assert (X / X) == 1
    assert (S - S ** -1) / Z == 1


def test_scalar_equality_by_cross_multiplication():
    assert Scalar(LaurentPoly.constant(2)) / (S + 1) == (Scalar.coerce(4) / (2 * S + 2))


def test_scalar_str():
    assert str(Z) == "s - s^-1"
    assert str(scalar_monomial(1, -1, 0)) == "x*v^-1"
    assert str(Scalar.coerce(1) / (S + 1)) == "1/(s + 1)"


def test_mirror():
    assert (X * S ** 2).mirror() == X ** -1 * S ** -2
    assert Z.mirror() == -Z


def test_to_rational():
    assert to_rational("3/4") == to_rational(Fraction(3, 4))
    assert to_rational(5) == 5


def test_specialize_delta_sl2():
    value = specialize_slN(DELTA, 2)
    coefficients = h_expand(value, 2, 2)
    assert coefficients[0] == 2
    assert coefficients[1] == 0
    assert coefficients[2] == to_rational("1/4")


def test_specialize_rejects_small_rank():
    with pytest.raises(ValueError):
        specialize_slN(DELTA, 1)


def test_specialize_vanishing_denominator():
    with pytest.raises(SpecializationError):
        specialize_slN(Scalar.coerce(1) / (S - X ** -2), 2)


def test_pole_order():
    with pytest.raises(PoleError) as info:
        h_expand(specialize_slN(Scalar.coerce(1) / Z, 2), 2, 0)
    assert info.value.order == 1


def test_h_expand_validation():
    with pytest.raises(ValueError):
        h_expand(specialize_slN(DELTA, 2), 0, 1)
    with pytest.raises(ValueError) as info:
        h_expand(DELTA, 2, 1)
    assert "specialize_slN" in str(info.value)


def test_quantum_int_cap(monkeypatch):
    monkeypatch.setattr(Config, 'MAX_QINT', 10)
    assert len(quantum_int(10)) == 10
    with pytest.raises(EnumerationLimitError):
        quantum_int(11)


@pytest.mark.parametrize('seed', range(5))
def test_laurent_ring_axioms(seed):
    rng = random.Random(seed)
    a, b, c = (random_laurent(rng) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * 1 == a
    assert a + 0 == a
    assert (a - a).is_zero()


@pytest.mark.parametrize('seed', range(5))
def test_scalar_equality_is_an_equivalence(seed):
    rng = random.Random(100 + seed)
    a = random_scalar(rng)
    r1, r2 = random_laurent(rng) + 7, random_laurent(rng) + 11
    b = Scalar(a.num * r1, a.den * r1)
    c = Scalar(a.num * r2, a.den * r2)
    assert a == a
    assert a == b and b == a
    assert b == c and a == c
    assert a != a + 1


def test_quantum_int_times_z():
    for i in range(21):
        assert Scalar.coerce(quantum_int(i)) * Z == S ** i - S ** -i


@pytest.mark.parametrize('seed', range(4))
def test_specialize_is_a_ring_map(seed):
    rng = random.Random(200 + seed)
    a, b = Scalar.coerce(random_laurent(rng)), Scalar.coerce(random_laurent(rng)) / (S + 2)
    for N in (2, 3):
        assert specialize_slN(a + b, N) == specialize_slN(a, N) + specialize_slN(b, N)
        assert specialize_slN(a * b, N) == specialize_slN(a, N) * specialize_slN(b, N)


@pytest.mark.parametrize('seed', range(6))
def test_scalar_text_round_trip(seed):
    rng = random.Random(300 + seed)
    value = random_scalar(rng)
    assert parse_expression(str(value)) == value
    assert str(parse_expression(str(value))) == str(value)


def test_h_expand_of_a_constant():
    assert h_expand(Scalar.coerce(1), 3, 3) == [1, 0, 0, 0]
