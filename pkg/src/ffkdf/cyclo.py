"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A :class:`CycloValue` stores ``sum_k c_k zeta_N^k`` reduced modulo the
cyclotomic polynomial, so ``k < deg Phi_N``.  Coefficients are kept as a
sparse dict of integer numerators over one positive common denominator, in
lowest terms.  That normal form makes equality a plain comparison.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import sympy

from .errors import CapExceeded, DivisionByZeroRational, LevelMismatch, NotDivisible

LEVEL_CAP = 1 << 20


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_N, lowest degree first.

    Computed as (x^N - 1) divided exactly by Phi_d for every proper divisor d.
    """
    if N < 1:
        raise ValueError("level must be positive")
    if N > LEVEL_CAP:
        raise CapExceeded(f"level {N} exceeds cap {LEVEL_CAP}")
    num = [-1] + [0] * (N - 1) + [1]
    for d in _divisors(N)[:-1]:
        num = _exact_div(num, cyclotomic_poly(d))
    return tuple(num)


def _exact_div(num, den):
    # den is monic, so long division stays in Z
    num = list(num)
    dl = len(den) - 1
    out = [0] * (len(num) - dl)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dl]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[:dl]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def _power_table(N: int) -> tuple[dict, ...]:
    """zeta_N^e reduced modulo Phi_N, for e in 0..N-1, as sparse integer dicts."""
    phi = cyclotomic_poly(N)
    d = len(phi) - 1
    table = []
    cur = {0: 1}
    for _ in range(N):
        table.append(cur)
        nxt = {}
        for k, c in cur.items():
            nxt[k + 1] = nxt.get(k + 1, 0) + c
        top = nxt.pop(d, 0)
        if top:
            for j in range(d):
                if phi[j]:
                    nxt[j] = nxt.get(j, 0) - top * phi[j]
        cur = {k: c for k, c in nxt.items() if c}
    return tuple(table)


def degree(N: int) -> int:
    return len(cyclotomic_poly(N)) - 1


class CycloValue:
    """Immutable element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("level", "num", "den", "_hash")

    def __init__(self, level: int, num: dict[int, int] | None = None, den: int = 1, *, _canonical=False):
        self.level = level
        if _canonical:
            self.num, self.den = num, den
        else:
            self.num, self.den = _normalize(level, num or {}, den)
        self._hash = None

    # -- constructors ----------------------------------------------------------------

    @classmethod
    def from_exponents(cls, level: int, terms: dict[int, Rational]) -> "CycloValue":
        """Build ``sum c_e zeta^e`` for arbitrary exponents e (taken mod N)."""
        den = 1
        for c in terms.values():
            den = math.lcm(den, Fraction(c).denominator)
        acc: dict[int, int] = {}
        for e, c in terms.items():
            c = Fraction(c) * den
            if c:
                e %= level
                acc[e] = acc.get(e, 0) + int(c)
        return cls(level, _reduce_exponents(level, acc), den)

    @classmethod
    def rational(cls, level: int, r: Rational) -> "CycloValue":
        r = Fraction(r)
        return cls(level, {0: r.numerator} if r else {}, r.denominator)

    @classmethod
    def from_coeffs(cls, level: int, coeffs) -> "CycloValue":
        return cls.from_exponents(level, dict(enumerate(coeffs)))

    # -- views -----------------------------------------------------------------------

    def coeffs(self) -> list[Fraction]:
        """Dense coefficient vector of length deg Phi_N."""
        out = [Fraction(0)] * degree(self.level)
        for k, c in self.num.items():
            out[k] = Fraction(c, self.den)
        return out

    def is_zero(self) -> bool:
        return not self.num

    def is_rational(self) -> bool:
        return all(k == 0 for k in self.num)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("value is not rational")
        return Fraction(self.num.get(0, 0), self.den)

    def to_complex(self) -> complex:
        w = 2j * math.pi / self.level
        return sum(c * cmath.exp(w * k) for k, c in self.num.items()) / self.den if self.num else 0j

    # -- arithmetic ------------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloValue):
            if other.level != self.level:
                raise LevelMismatch(f"levels {self.level} and {other.level} differ")
            return other
        if isinstance(other, Rational):
            return CycloValue.rational(self.level, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = math.lcm(self.den, o.den)
        a, b = den // self.den, den // o.den
        acc = {k: c * a for k, c in self.num.items()}
        for k, c in o.num.items():
            acc[k] = acc.get(k, 0) + c * b
        return CycloValue(self.level, acc, den)

    __radd__ = __add__

    def __neg__(self):
        return CycloValue(self.level, {k: -c for k, c in self.num.items()}, self.den, _canonical=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational):
            r = Fraction(other)
            return CycloValue(self.level, {k: c * r.numerator for k, c in self.num.items()}, self.den * r.denominator)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return CycloValue(self.level, {}, 1, _canonical=True)
        N = self.level
        acc: dict[int, int] = {}
        for i, a in self.num.items():
            for j, b in o.num.items():
                e = (i + j) % N
                acc[e] = acc.get(e, 0) + a * b
        return CycloValue(N, _reduce_exponents(N, acc), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloValue":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        if self.is_rational():
            return CycloValue.rational(self.level, 1 / self.to_fraction())
        x = sympy.Symbol("x")
        modulus = sympy.Poly(list(reversed(cyclotomic_poly(self.level))), x, domain="QQ")
        poly = sympy.Poly(list(reversed(self._dense_ints())), x, domain="QQ")
        inv = sympy.invert(poly, modulus)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        return CycloValue.from_coeffs(self.level, coeffs) * self.den

    def _dense_ints(self) -> list[int]:
        out = [0] * degree(self.level)
        for k, c in self.num.items():
            out[k] = c
        return out or [0]

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise DivisionByZeroRational("division by the rational 0")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycloValue.rational(self.level, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- Galois action, change of level ---------------------------------------------

    def galois(self, k: int) -> "CycloValue":
        """sigma_k: zeta -> zeta^k, for k prime to the level."""
        N = self.level
        if math.gcd(k, N) != 1:
            raise ValueError(f"{k} is not a unit mod {N}")
        acc = {}
        for e, c in self.num.items():
            e2 = (e * k) % N
            acc[e2] = acc.get(e2, 0) + c
        return CycloValue(N, _reduce_exponents(N, acc), self.den)

    def embed(self, M: int) -> "CycloValue":
        N = self.level
        if M % N:
            raise NotDivisible(f"{N} does not divide {M}")
        s = M // N
        return CycloValue(M, _reduce_exponents(M, {e * s: c for e, c in self.num.items()}), self.den)

    def descend(self, M: int) -> "CycloValue | None":
        """The level-M value embedding to ``self``, or None if there is none."""
        N = self.level
        if N % M:
            raise NotDivisible(f"{M} does not divide {N}")
        dM, dN = degree(M), degree(N)
        cols = [CycloValue(M, {i: 1}).embed(N)._dense_ints() for i in range(dM)]
        A = sympy.Matrix(dN, dM, lambda r, c: cols[c][r])
        b = sympy.Matrix([sympy.Rational(c, self.den) for c in self._dense_ints_len(dN)])
        try:
            sol, params = A.gauss_jordan_solve(b)
        except ValueError:
            return None
        if params.shape[0]:
            sol = sol.subs({s: 0 for s in params})
        return CycloValue.from_coeffs(M, [Fraction(int(v.p), int(v.q)) for v in sol])

    def _dense_ints_len(self, n):
        out = [0] * n
        for k, c in self.num.items():
            out[k] = c
        return out

    # -- protocol --------------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycloValue):
            return self.level == other.level and self.den == other.den and self.num == other.num
        if isinstance(other, Rational):
            return self.is_rational() and self.to_fraction() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.level, self.den, tuple(sorted(self.num.items()))))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        if not self.num:
            return f"CycloValue({self.level}, 0)"
        terms = " + ".join(f"{c}*z^{k}" for k, c in sorted(self.num.items()))
        tail = f")/{self.den}" if self.den != 1 else ")"
        return f"CycloValue({self.level}, ({terms}{tail})"

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs()],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CycloValue":
        level = int(obj["level"])
        return cls.from_coeffs(level, [Fraction(int(n), int(d)) for n, d in obj["coeffs"]])


def _reduce_exponents(N: int, acc: dict[int, int]) -> dict[int, int]:
    """Rewrite sum c_e zeta^e (0 <= e < N) in the reduced basis."""
    table = _power_table(N)
    d = degree(N)
    out: dict[int, int] = {}
    for e, c in acc.items():
        if not c:
            continue
        if e < d:
            out[e] = out.get(e, 0) + c
        else:
            for k, v in table[e].items():
                out[k] = out.get(k, 0) + c * v
    return out


def _normalize(level, num, den):
    if den == 0:
        raise DivisionByZeroRational("zero denominator")
    num = {k: c for k, c in num.items() if c}
    if den < 0:
        num = {k: -c for k, c in num.items()}
        den = -den
    if not num:
        return {}, 1
    g = den
    for c in num.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    if g > 1:
        num = {k: c // g for k, c in num.items()}
        den //= g
    return num, den


def cyc_root(N: int, k: int) -> CycloValue:
    return CycloValue(N, dict(_power_table(N)[k % N]), 1)


def cyc_arith(op: str, a: CycloValue, b) -> CycloValue:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale_by_rational":
        if not isinstance(b, Rational):
            raise TypeError("scale_by_rational needs a rational")
        return a * Fraction(b)
    raise ValueError(f"unknown op {op!r}")


def cyc_embed(a: CycloValue, M: int) -> CycloValue:
    return a.embed(M)


def cyc_to_complex(a: CycloValue) -> complex:
    return a.to_complex()
