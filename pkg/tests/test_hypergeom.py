import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ffkdf.characters import MultChar, gauss_sum, gauss_variant, poch, poch_variant
from ffkdf.cyclo import CycloValue, cyc_to_complex
from ffkdf.field import construct_field
from ffkdf.hypergeom import (
    FactorSpec,
    KdFParams,
    WeightFn,
    hyp_F,
    kdf_eval,
    kdf_factors,
    nFm,
    weighted_double_sum,
    weighted_single_sum,
)
from ffkdf.params import ParamMultiset
from ffkdf.rings import ModRing, Uncertified, Vals

F5 = construct_field("5")
F7 = construct_field("7")


def ms(F, *js):
    return ParamMultiset(F, js)


def ch(F, j):
    return MultChar(F, j)


def test_F_at_zero(small_field):
    F = small_field
    assert hyp_F(ms(F, 1), ms(F, 0, 1), 0) == 0


@pytest.mark.parametrize("spec", ["3", "2^2", "5", "7"])
def test_geometric(spec):
    F = construct_field(spec)
    for u in range(1, F.q - 1):
        for x in range(1, F.q):
            assert nFm([ch(F, u)], [], x) == ch(F, -u)(F.sub(1, x))
    for x in range(2, F.q):
        assert nFm([ch(F, 0)], [], x) == 1
    assert nFm([ch(F, 0)], [], 1) == 1 - F.q


def test_euler_gauss_and_vandermonde():
    F = F5
    for a, b, c in itertools.product(range(4), repeat=3):
        A, B, C = ch(F, a), ch(F, b), ch(F, c)
        if ms(F, a, b).pairing(ms(F, c, 0)) == 0:
            rhs = gauss_variant(C) * gauss_sum(C / A / B) / (gauss_variant(C / A) * gauss_variant(C / B))
            assert nFm([A, B], [C], 1) == rhs
        for n in range(4):
            if ms(F, a).pairing(ms(F, 0, c)) == 0:
                N = ch(F, n)
                assert nFm([A, N.conj()], [C], 1) == poch(C / A, N) / poch_variant(C, N)


def test_float_backend_agrees():
    x = 3
    exact = nFm([ch(F5, 1), ch(F5, 1)], [ch(F5, 2)], x)
    approx = nFm([ch(F5, 1), ch(F5, 1)], [ch(F5, 2)], x, backend="float")
    assert abs(cyc_to_complex(exact) - approx) < 1e-9


def test_shift_formula():
    F = F7
    rng = random.Random(7)
    for _ in range(40):
        a = ms(F, *rng.choices(range(6), k=2))
        b = ms(F, *rng.choices(range(6), k=2))
        phi, x = rng.randrange(6), rng.randrange(F.q)
        rhs = a.poch(phi) / b.poch_variant(phi) * ch(F, phi)(x) * hyp_F(a.twist(phi), b.twist(phi), x)
        assert hyp_F(a, b, x) == rhs


def test_kdf_zero_arguments():
    P = KdFParams(ms(F5, 1), ms(F5, 2), ms(F5), ms(F5, 3), ms(F5), ms(F5, 1))
    assert kdf_eval(P, 0, 3) == 0
    assert kdf_eval(P, 2, 0) == 0


def test_binomial_remark():
    F = F5
    for a, b, c in itertools.product(range(4), repeat=3):
        P = KdFParams(ms(F, a, c), ms(F), ms(F), ms(F, b), ms(F), ms(F))
        for x, y in [(1, 1), (2, 3), (4, 4)]:
            s = F.add(x, y)
            assert kdf_eval(P, x, y) == nFm([ch(F, a), ch(F, c)], [ch(F, b)], s) + int(s == 0)


def test_kdf_matches_weighted_sum():
    rng = random.Random(11)
    for _ in range(15):
        P = KdFParams(*[ms(F5, *rng.choices(range(4), k=rng.randrange(3))) for _ in range(6)])
        x, y = rng.randrange(1, 5), rng.randrange(1, 5)
        w = weighted_double_sum(WeightFn.constant(F5), kdf_factors(P), x, y, scale=Fraction(1, 16))
        assert w == kdf_eval(P, x, y)


def test_weighted_zero():
    P = KdFParams(ms(F5, 1), ms(F5, 2), ms(F5), ms(F5), ms(F5), ms(F5))
    assert weighted_double_sum(WeightFn.constant(F5, 0), kdf_factors(P), 2, 3) == 0


def test_weight_recovers_corollary_lhs():
    # f(mu) = (d)_mu / (r)°_mu turns the three-parameter sum into the diagonal F^{1:1:2}_{1:0:1}
    F = F7
    a, b, c, d, r = 1, 3, 5, 2, 4
    f = WeightFn([poch(ch(F, d), ch(F, mu)) / poch_variant(ch(F, r), ch(F, mu)) for mu in range(6)])
    eps = ms(F, 0)
    factors = [
        FactorSpec(ms(F, a), "numu", "num"),
        FactorSpec(ms(F, b), "numu", "den"),
        FactorSpec(ms(F, c), "nu", "num"),
        FactorSpec(eps, "nu", "den"),
        FactorSpec(ms(F, b - c), "mu", "num"),
        FactorSpec(eps, "mu", "den"),
    ]
    P = KdFParams(ms(F, a), ms(F, c), ms(F, b - c, d), ms(F, b), ms(F), ms(F, r))
    for x in range(2, 7):
        assert weighted_double_sum(f, factors, x, x, scale=Fraction(1, 36)) == kdf_eval(P, x, x)


def test_single_sum_examples():
    F = F7
    a, b = ms(F, 1, 4), ms(F, 2)
    one = WeightFn.constant(F)
    for x in range(F.q):
        w = weighted_single_sum(one, [(a, "num"), (b + ms(F, 0), "den")], x)
        assert w == hyp_F(a, b + ms(F, 0), x) * (1 - F.q)
        assert weighted_single_sum(one, [], x, field=F) == (F.q - 1) * int(x == 1)


def test_cancellation_formula():
    F = F5
    q = F.q
    rng = random.Random(3)
    for _ in range(25):
        a, b, g = (ms(F, *rng.choices(range(4), k=k)) for k in (2, 1, rng.randrange(1, 3)))
        x = rng.randrange(q)
        k = [g.pairing(ms(F, nu)) for nu in range(4)]
        weights = [Fraction(1) - Fraction(1, q**k[-nu % 4]) for nu in range(4)]
        w = WeightFn([v / (1 - Fraction(1, q)) for v in weights])
        # the corrective sum runs over nu-bar; reindex eta = nu-bar
        corr = weighted_single_sum(w, [(a, "num"), (b, "den")], x)
        lhs = hyp_F(a + g, b + g, x)
        rhs = Fraction(q) ** g.pairing(ms(F, 0)) * (hyp_F(a, b, x) + corr / q)
        assert lhs == rhs


@given(st.sampled_from(["5", "7", "2^2"]), st.data())
def test_permutation_invariance(spec, data):
    F = construct_field(spec)
    js = st.lists(st.integers(0, F.q - 2), min_size=1, max_size=3)
    a, b = data.draw(js), data.draw(js)
    x, y = data.draw(st.integers(1, F.q - 1)), data.draw(st.integers(1, F.q - 1))
    pa, pb = data.draw(st.permutations(a)), data.draw(st.permutations(b))
    assert hyp_F(ParamMultiset(F, a), ParamMultiset(F, b), x) == hyp_F(ParamMultiset(F, pa), ParamMultiset(F, pb), x)
    P1 = KdFParams(ParamMultiset(F, a), ms(F), ms(F, 1), ParamMultiset(F, b), ms(F), ms(F))
    P2 = KdFParams(ParamMultiset(F, pa), ms(F), ms(F, 1), ParamMultiset(F, pb), ms(F), ms(F))
    assert kdf_eval(P1, x, y) == kdf_eval(P2, x, y)


def test_uncertified_escalation():
    R = ModRing(20, nprimes=1)
    zero = Vals(R, R.table([CycloValue(20)]), 1, 1e40)
    with pytest.raises(Uncertified) as exc:
        zero.is_zero()
    assert exc.value.bits_needed > R.modulus_bits
    R2 = ModRing(20, nprimes=math.ceil(exc.value.bits_needed / 30.9) + 1)
    assert R2.is_zero(Vals(R2, R2.table([CycloValue(20)]), 1, 1e40)).all()
