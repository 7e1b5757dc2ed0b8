"""Evaluate a two-variable character sum two ways and watch it collapse to a 2F1.

The F^{2:0:0}_{1:0:0} sum with parameters (a, c; b) depends on x and y only
through x + y.
"""
from fractions import Fraction

from ffkdf import KdFParams, MultChar, ParamMultiset, construct_field, kdf_eval, nFm
from ffkdf.hypergeom import WeightFn, kdf_factors, weighted_double_sum

F = construct_field("7")
ms = lambda *js: ParamMultiset(F, js)  # noqa: E731
a, b, c = 1, 4, 2
P = KdFParams(ms(a, c), ms(), ms(), ms(b), ms(), ms())

print("x y | double sum == 2F1(x+y) + [x+y=0]")
for x in range(1, 7):
    for y in (1, 3, 6):
        lhs = kdf_eval(P, x, y)
        s = F.add(x, y)
        rhs = nFm([MultChar(F, a), MultChar(F, c)], [MultChar(F, b)], s) + int(s == 0)
        print(x, y, "|", lhs == rhs)

# the generic engine reproduces the literal double loop
one = WeightFn.constant(F)
w = weighted_double_sum(one, kdf_factors(P), 2, 5, scale=Fraction(1, (1 - F.q) ** 2))
print("engine agrees with loop:", w == kdf_eval(P, 2, 5))

# balanced degrees make the value independent of the additive character
vals = {kdf_eval(P, 2, 5, twist=t) for t in range(1, F.q)}
print("distinct values across the 6 additive characters:", len(vals))
print("lies in Q(zeta_6):", vals.pop().descend(F.m) is not None)
