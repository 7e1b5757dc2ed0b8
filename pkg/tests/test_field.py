import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import field_and_elements, fields
from ffkdf.errors import CapExceeded, InvertZero, LogOfZero, NonPrimeP, ParseError, ReducibleModulus
from ffkdf.field import (
    FieldSpec,
    canonical_modulus,
    construct_field,
    discrete_log,
    field_arith,
    is_irreducible,
    kron_delta,
    trace,
)


def test_prime_field_generator():
    F = construct_field(FieldSpec(5))
    assert (F.q, F.generator) == (5, 2)


def test_f9_with_explicit_modulus():
    F = construct_field("3^2/1,0,1")
    assert F.q == 9
    assert tuple(F.modulus) == (1, 0, 1)


def test_canonical_modulus_is_lex_smallest():
    assert canonical_modulus(3, 2) == (1, 0, 1)
    assert canonical_modulus(2, 2) == (1, 1, 1)
    assert canonical_modulus(2, 3) == (1, 0, 1, 1)  # 1 + t^2 + t^3 precedes 1 + t + t^3
    # t^2 + 1 is reducible over F_5 (2^2 = -1)
    assert not is_irreducible((1, 0, 1), 5)


def test_construction_errors():
    with pytest.raises(NonPrimeP):
        construct_field(FieldSpec(4))
    with pytest.raises(ReducibleModulus):
        construct_field("5^2/1,0,1")
    with pytest.raises(CapExceeded):
        construct_field("3^11")
    with pytest.raises(ParseError):
        FieldSpec.parse("5^")


def test_spec_roundtrip():
    for text in ("7", "2^3", "3^2/2,2,1"):
        assert str(FieldSpec.parse(text)) == text


def test_arith_examples():
    F = construct_field(5)
    assert field_arith(F, "mul", 2, 3) == 1
    assert field_arith(F, "neg", 0) == 0
    with pytest.raises(InvertZero):
        field_arith(F, "inv", 0)


def test_dlog_examples():
    F = construct_field(7)
    assert F.generator == 3
    assert discrete_log(F, 1) == 0
    assert discrete_log(F, F.generator) == 1
    assert discrete_log(F, 2) == 2
    with pytest.raises(LogOfZero):
        discrete_log(F, 0)


def test_trace_examples():
    F = construct_field(7)
    assert all(trace(F, x) == x for x in range(7))
    F9 = construct_field("3^2")
    assert trace(F9, 3) == 0  # t encodes as 0 + 1*3
    assert trace(F9, 0) == 0


def test_kron_delta():
    F = construct_field(5)
    assert kron_delta(0) == 1
    assert kron_delta(1) == 0
    assert kron_delta(F.sub(3, 3)) == 1


def test_exp_log_bijection(small_field):
    F = small_field
    ks = np.arange(F.m)
    assert sorted(F.exp_table[ks].tolist()) == list(range(1, F.q))
    xs = np.arange(1, F.q)
    assert (F.exp_table[F.log_table[xs]] == xs).all()
    # generator has order exactly q - 1
    assert all(F.pow(F.generator, k) != 1 for k in range(1, F.m))


def test_trace_matches_frobenius_orbit(small_field):
    F = small_field
    for x in range(F.q):
        orbit = 0
        y = x
        for _ in range(F.f):
            orbit = F.add(orbit, y)
            y = F.pow(y, F.p)
        assert orbit == F.trace(x)
        assert orbit < F.p


@pytest.mark.parametrize("spec", ["2", "3", "2^2", "5", "7", "2^3", "3^2", "2^4", "5^2", "2^5", "2^6"])
def test_field_axioms_exhaustive(spec):
    F = construct_field(spec)
    a, b, c = np.meshgrid(*(np.arange(F.q),) * 3, indexing="ij")
    a, b, c = a.ravel(), b.ravel(), c.ravel()
    assert (F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)).all()
    assert (F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)).all()
    assert (F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))).all()
    x = np.arange(F.q)
    assert (F.add(x, F.neg(x)) == 0).all()
    nz = np.arange(1, F.q)
    assert (F.mul(nz, F.inv(nz)) == 1).all()


@given(field_and_elements(2))
def test_trace_additive(data):
    F, x, y = data
    assert F.trace(F.add(x, y)) == (F.trace(x) + F.trace(y)) % F.p


@given(field_and_elements(2, nonzero=True))
def test_log_is_homomorphism(data):
    F, x, y = data
    assert F.log(F.mul(x, y)) == (F.log(x) + F.log(y)) % F.m


@given(fields(), st.integers(-50, 50))
def test_element_embeds_integers(F, n):
    assert F.element(n) == n % F.p
