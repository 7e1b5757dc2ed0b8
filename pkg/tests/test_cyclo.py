import cmath
import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ffkdf.cyclo import CycloValue, cyc_arith, cyc_embed, cyc_root, cyc_to_complex, cyclotomic_poly, degree
from ffkdf.errors import DivisionByZeroRational, LevelMismatch, NotDivisible

LEVELS = (1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 20, 24, 28)


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert degree(20) == 8


def test_roots():
    assert cyc_root(7, 0) == 1
    assert cyc_root(4, 2) == -1
    assert cyc_arith("add", cyc_root(3, 1), cyc_root(3, 2)) == -1
    acc = CycloValue(5)
    for k in range(1, 5):
        acc = cyc_arith("add", acc, cyc_root(5, k))
    assert acc == -1
    assert cyc_root(6, 13) == cyc_root(6, 1)


def test_identities_and_errors():
    a = CycloValue.from_coeffs(12, [1, Fraction(2, 3), 0, -5])
    assert cyc_arith("add", a, CycloValue(12)) == a
    assert cyc_arith("mul", a, CycloValue.rational(12, 1)) == a
    assert cyc_arith("scale_by_rational", a, Fraction(3, 2)) == a * Fraction(3, 2)
    with pytest.raises(LevelMismatch):
        cyc_arith("add", a, cyc_root(4, 1))
    with pytest.raises(DivisionByZeroRational):
        a / 0
    with pytest.raises(NotDivisible):
        cyc_embed(a, 18)
    with pytest.raises(ValueError):
        cyc_arith("pow", a, a)


def test_embed_examples():
    assert cyc_embed(CycloValue.rational(1, 1), 20) == 1
    assert cyc_embed(cyc_root(4, 1), 12) == cyc_root(12, 3)
    x = CycloValue.from_coeffs(4, [1, 2])
    y = CycloValue.from_coeffs(4, [-3, Fraction(1, 2)])
    assert cyc_embed(x, 12) * cyc_embed(y, 12) == cyc_embed(x * y, 12)


def test_descend():
    v = cyc_embed(CycloValue.from_coeffs(4, [1, 3]), 20)
    assert v.descend(4) == CycloValue.from_coeffs(4, [1, 3])
    assert cyc_root(20, 1).descend(4) is None


def test_to_complex_examples():
    assert cyc_to_complex(CycloValue.rational(3, 1)) == 1
    assert abs(cyc_to_complex(cyc_root(4, 1)) - 1j) < 1e-12


def test_json_roundtrip():
    a = CycloValue.from_coeffs(9, [Fraction(-7, 3), 0, 10**30, 1])
    doc = json.loads(json.dumps(a.to_json()))
    assert doc["level"] == 9
    assert len(doc["coeffs"]) == degree(9)
    assert CycloValue.from_json(doc) == a


def test_galois():
    z = cyc_root(8, 1)
    assert z.galois(3) == cyc_root(8, 3)
    with pytest.raises(ValueError):
        z.galois(2)


@st.composite
def values(draw, level=None, n=1):
    N = draw(st.sampled_from(LEVELS)) if level is None else level
    coef = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    out = [CycloValue.from_coeffs(N, draw(st.lists(coef, min_size=degree(N), max_size=degree(N)))) for _ in range(n)]
    return out


@given(values(n=3))
def test_ring_axioms(abc):
    a, b, c = abc
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert cyc_arith("sub", a, a).coeffs() == [0] * degree(a.level)


@given(values(n=1))
def test_inverse(a):
    a = a[0]
    if a:
        assert a * a.inverse() == 1


@given(values(level=4, n=2), st.sampled_from([12, 24, 60]))
def test_embed_homomorphism(xy, M):
    x, y = xy
    assert cyc_embed(x + y, M) == cyc_embed(x, M) + cyc_embed(y, M)
    assert cyc_embed(x * y, M) == cyc_embed(x, M) * cyc_embed(y, M)
    assert cyc_embed(cyc_embed(x, 12), 120) == cyc_embed(x, 120)


@given(st.sampled_from([7, 30, 64, 105, 120]).flatmap(lambda N: values(level=N, n=2)))
def test_to_complex_homomorphism(xy):
    x, y = xy
    cx, cy = cyc_to_complex(x), cyc_to_complex(y)
    assert cmath.isclose(cyc_to_complex(x + y), cx + cy, abs_tol=1e-9)
    assert cmath.isclose(cyc_to_complex(x * y), cx * cy, rel_tol=1e-9, abs_tol=1e-9)
