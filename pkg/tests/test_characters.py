import cmath
import math

import pytest

from ffkdf.characters import (
    AddChar,
    MultChar,
    add_char_eval,
    char_eval,
    delta_fn,
    gauss_sum,
    gauss_variant,
    poch,
    poch_variant,
    quadratic,
    trivial,
)
from ffkdf.cyclo import CycloValue, cyc_root, cyc_to_complex
from ffkdf.field import construct_field


def chars(F):
    return [MultChar(F, j) for j in range(F.q - 1)]


def test_char_values(small_field):
    F = small_field
    for chi in chars(F):
        assert char_eval(chi, 0) == 0
    for x in range(1, F.q):
        assert trivial(F)(x) == 1
    for chi in chars(F):
        for x in range(1, F.q):
            for y in range(1, F.q):
                assert chi(F.mul(x, y)) == chi(x) * chi(y)


def test_f5_example():
    F = construct_field("5")
    assert char_eval(MultChar(F, 1), 4) == -1


def test_additive_character(small_field):
    F = small_field
    psi = AddChar(F, 1)
    assert psi(0) == 1
    assert sum((psi(x) for x in range(F.q)), CycloValue(F.p * (F.q - 1))) == 0
    for x in range(F.q):
        for y in range(F.q):
            assert psi(F.add(x, y)) == psi(x) * psi(y)


def test_psi_on_f3():
    F = construct_field("3")
    assert add_char_eval(AddChar(F), 1) == cyc_root(6, 2)  # zeta_3 at level 6


def test_delta():
    F = construct_field("7")
    assert delta_fn(trivial(F)) == 1
    assert delta_fn(MultChar(F, 1)) == 0
    assert delta_fn(MultChar(F, 6)) == 1


def test_gauss_examples():
    F = construct_field("5")
    phi = quadratic(F)
    assert gauss_sum(trivial(F)) == 1
    assert gauss_variant(trivial(F)) == 5
    assert gauss_sum(phi) * gauss_sum(phi) == 5
    assert gauss_variant(phi) ** 2 == 5
    assert abs(cyc_to_complex(gauss_sum(phi)) + math.sqrt(5)) < 1e-9


def test_gauss_matches_complex_sum():
    # independent float summation of -sum phi(x) psi(x) over F_5
    F = construct_field("5")
    phi = quadratic(F)
    direct = -sum(cyc_to_complex(phi(x)) * cmath.exp(2j * math.pi * x / 5) for x in range(5))
    assert abs(cyc_to_complex(gauss_sum(phi)) - direct) < 1e-9


def test_reflection(small_field):
    F = small_field
    for chi in chars(F):
        lhs = gauss_sum(chi) * gauss_variant(chi.conj())
        assert lhs == chi(F.neg(1)) * F.q


def test_absolute_value(small_field):
    F = small_field
    for chi in chars(F)[1:]:
        assert abs(abs(cyc_to_complex(gauss_sum(chi))) - math.sqrt(F.q)) < 1e-9


def test_pochhammer_examples(small_field):
    F = small_field
    eps = trivial(F)
    for a in chars(F):
        assert poch(a, eps) == 1
        assert poch_variant(a, eps) == 1
        assert poch(eps, a) == gauss_sum(a)
        for nu in chars(F):
            assert poch(a, nu) * poch_variant(a.conj(), nu.conj()) == nu(F.neg(1))


def test_transitivity(small_field):
    F = small_field
    cs = chars(F)
    for a in cs:
        for nu in cs:
            for mu in cs:
                assert poch(a, nu * mu) == poch(a, nu) * poch(a * nu, mu)
                assert poch_variant(a, nu * mu) == poch_variant(a, nu) * poch_variant(a * nu, mu)


@pytest.mark.parametrize("spec", ["3", "5", "7", "3^2", "11"])
def test_duplication(spec):
    F = construct_field(spec)
    phi = quadratic(F)
    g = gauss_sum
    four = F.add(F.add(1, 1), F.add(1, 1))
    for a in chars(F):
        assert g(a ** 2) * g(phi) == a(four) * g(a) * g(a * phi)


@pytest.mark.parametrize("spec", ["3", "2^2", "5", "7", "2^3", "3^2"])
def test_twist_covariance(spec):
    F = construct_field(spec)
    for c in range(1, F.q):
        psi = AddChar(F, c)
        for chi in chars(F):
            assert gauss_sum(chi, psi) == chi.conj()(c) * gauss_sum(chi)


def test_bad_additive_twist():
    with pytest.raises(ValueError):
        AddChar(construct_field("5"), 0)
