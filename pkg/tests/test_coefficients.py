from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from opcalc.coefficients import QQ, FieldMismatchError, ModP, PrimeField, parse_field

PRIMES = [2, 3, 5, 7, 101]
rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


@st.composite
def residues(draw):
    p = draw(st.sampled_from(PRIMES))
    F = PrimeField(p)
    return F, [F(draw(st.integers(-1000, 1000))) for _ in range(3)]


@given(residues())
def test_prime_field_axioms(data):
    F, (a, b, c) = data
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + F.zero == a and a * F.one == a
    assert a + (-a) == F.zero
    if a != F.zero:
        assert a * (F.one / a) == F.one


@given(rationals, rationals)
def test_rational_field_round_trip(a, b):
    assert QQ.parse(QQ.format(a)) == a
    assert QQ(a) + QQ(b) == a + b


@given(st.sampled_from(PRIMES), st.integers(-10**6, 10**6))
def test_residue_round_trip(p, n):
    F = PrimeField(p)
    x = F(n)
    assert F.parse(F.format(x)) == x
    assert 0 <= x.v < p


def test_fraction_into_prime_field():
    F = PrimeField(7)
    assert F(Fraction(1, 2)) * 2 == F.one
    assert F.parse("3/5") * 5 == F(3)
    with pytest.raises(ZeroDivisionError):
        F(Fraction(1, 7))


def test_mixing_fields_is_refused():
    with pytest.raises(FieldMismatchError):
        PrimeField(3)(1) + PrimeField(5)(1)
    with pytest.raises(FieldMismatchError):
        ModP(1, 3) + Fraction(1, 2)
    with pytest.raises(FieldMismatchError):
        QQ(ModP(1, 3))


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        QQ(0.5)
    with pytest.raises(TypeError):
        PrimeField(5)(1.0)


def test_parse_field():
    assert parse_field("Q") == QQ
    assert parse_field("Fp:7") == PrimeField(7)
    assert parse_field(" Fp:7 ").characteristic == 7
    for bad in ("Fp:8", "Fp:x", "R", "Fp:1"):
        with pytest.raises(ValueError):
            parse_field(bad)


def test_invertible_integers():
    assert QQ.invertible(3)
    assert not PrimeField(3).invertible(6)
    assert PrimeField(3).invertible(4)
