"""Gauss sums over a few small fields, exactly and as complex numbers.

Run with ``python demos/gauss_sums.py``.
"""
import math

from ffkdf import MultChar, construct_field, gauss_sum, gauss_variant, quadratic

for spec in ("5", "2^3", "3^2"):
    F = construct_field(spec)
    print(f"F_{F.q}: generator {F.generator}, modulus {list(F.modulus)}")
    for j in range(F.m):
        chi = MultChar(F, j)
        z = gauss_sum(chi).to_complex()
        print(f"  g(chi_{j}) = {z.real:+.6f} {z.imag:+.6f}i   |g| = {abs(z):.6f}")
    print(f"  sqrt(q) = {math.sqrt(F.q):.6f}")

# the quadratic character of F_5 has a real Gauss sum, -sqrt(5) for psi(x) = exp(2 pi i x / 5)
F5 = construct_field("5")
g = gauss_sum(quadratic(F5))
print("g(phi)^2 over F_5 =", g * g)
print("g(phi) ~", g.to_complex().real)

# reflection: g(chi) g°(chi-bar) = chi(-1) q, checked exactly for every character
for j in range(F5.m):
    chi = MultChar(F5, j)
    assert gauss_sum(chi) * gauss_variant(chi.conj()) == chi(F5.neg(1)) * F5.q
print("reflection holds for all characters of F_5")
