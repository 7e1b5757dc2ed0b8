import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import fields
from ffkdf.characters import MultChar, poch, poch_variant
from ffkdf.errors import FieldMismatch, ParseError
from ffkdf.field import construct_field
from ffkdf.params import ParamMultiset, ms_degree, ms_pairing, ms_poch, ms_poch_variant, ms_twist

F7 = construct_field("7")


def ms(*js, F=F7):
    return ParamMultiset(F, js)


def test_degree():
    assert ms_degree(ms()) == 0
    assert ms_degree(ms(1)) == 1
    assert ms_degree(ms(1, 1, 2)) == 3


def test_pairing():
    assert ms_pairing(ms(1), ms(1)) == 1
    assert ms_pairing(ms(1), ms(2)) == 0
    assert ms_pairing(ms(1, 1), ms(1, 2)) == 2
    with pytest.raises(FieldMismatch):
        ms_pairing(ms(1), ms(1, F=construct_field("5")))


def test_twist():
    assert ms_twist(ms(1, 4), 0) == ms(1, 4)
    assert ms_twist(ms(1, 4), MultChar(F7, 3)) == ms(4, 1)
    assert ms_twist(ms_twist(ms(2, 2, 5), 2), -2) == ms(2, 2, 5)


def test_poch_examples():
    nu = MultChar(F7, 2)
    a = MultChar(F7, 1)
    assert ms_poch(ms(), nu) == 1
    assert ms_poch(ms(1), nu) == poch(a, nu)
    assert ms_poch(ms(1, 1), nu) == poch(a, nu) ** 2
    assert ms_poch_variant(ms(1, 0), nu) == poch_variant(a, nu) * poch_variant(MultChar(F7, 0), nu)


def test_parse():
    assert ParamMultiset.parse(F7, "1,3^2") == ms(1, 3, 3)
    assert ParamMultiset.parse(F7, "-") == ms()
    assert ParamMultiset.parse(F7, "-1") == ms(5)
    assert str(ms(3, 1, 3)) == "1,3^2"
    for bad in ("1,,", "x", "1^", "1^-2"):
        with pytest.raises(ParseError):
            ParamMultiset.parse(F7, bad)


def test_negative_multiplicity():
    with pytest.raises(ValueError):
        ParamMultiset.from_counts(F7, {1: -1})


@st.composite
def multisets(draw, n=2):
    F = draw(fields())
    js = st.lists(st.integers(0, F.q - 2), max_size=4)
    return (F, *[ParamMultiset(F, draw(js)) for _ in range(n)], draw(st.integers(0, F.q - 2)))


@given(multisets(n=3))
def test_monoid_laws(data):
    F, A, B, C, nu = data
    assert A + B == B + A
    assert (A + B) + C == A + (B + C)
    assert A + ParamMultiset(F) == A
    assert ms_degree(A + B) == ms_degree(A) + ms_degree(B)


@given(multisets(n=3))
def test_pairing_bilinear(data):
    F, A, B, C, nu = data
    assert ms_pairing(A, B) == ms_pairing(B, A)
    assert ms_pairing(A + B, C) == ms_pairing(A, C) + ms_pairing(B, C)


@given(multisets(n=2))
def test_poch_homomorphism(data):
    F, A, B, nu = data
    assert ms_poch(A + B, nu) == ms_poch(A, nu) * ms_poch(B, nu)
    assert ms_poch_variant(A + B, nu) == ms_poch_variant(A, nu) * ms_poch_variant(B, nu)
    assert ms_poch(A, 0) == 1
