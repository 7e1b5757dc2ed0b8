"""Finite fields F_{p^f} tabulated by discrete logarithm.

Elements are encoded as integers ``0 .. q-1`` whose base-``p`` digits are the
coefficients of the polynomial-basis representation, lowest degree first.  So
``0`` is the additive identity, ``1`` the multiplicative one, and the prime
subfield is ``0 .. p-1``.

Multiplication and inversion go through the ``exp``/``log`` tables against the
canonical generator; addition is digit-wise mod ``p``.  Every arithmetic
method accepts either a Python int or a numpy integer array.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import isprime

from .errors import (
    CapExceeded,
    InvertZero,
    LogOfZero,
    NonPrimeP,
    ParseError,
    ReducibleModulus,
)

DEFAULT_CAP = 1 << 16

_SPEC_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*(?:/\s*([\d\s,]+))?)?\s*$")


# -- polynomials over F_p, coefficient lists lowest degree first ----------------


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = _trim(a)
    m = _trim(m)
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        a = _trim(a)
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pgcd(a, b, p):
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, m, p):
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(poly, p: int) -> bool:
    """Ben-Or test: no factor of degree <= deg/2 divides ``poly``."""
    poly = _trim(poly)
    f = len(poly) - 1
    if f < 1:
        return False
    if f == 1:
        return True
    xp = [0, 1]
    for _ in range(f // 2):
        xp = _ppowmod(xp, p, poly, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(poly, diff, p)) > 1:
            return False
    return True


def canonical_modulus(p: int, f: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree ``f``, coefficients compared low degree first."""
    if f == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=f):
        cand = low + (1,)
        if low[0] != 0 and is_irreducible(cand, p):
            return cand
    raise ReducibleModulus(f"no irreducible polynomial of degree {f} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    p: int
    f: int = 1
    modulus: tuple[int, ...] | None = None

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"p"``, ``"p^f"`` or ``"p^f/c0,c1,...,cf"``."""
        mt = _SPEC_RE.match(text)
        if not mt:
            raise ParseError(f"bad field spec {text!r}")
        p = int(mt.group(1))
        f = int(mt.group(2) or 1)
        modulus = None
        if mt.group(3) is not None:
            try:
                modulus = tuple(int(c) for c in mt.group(3).split(","))
            except ValueError as exc:
                raise ParseError(f"bad modulus in {text!r}") from exc
            if len(modulus) != f + 1:
                raise ParseError(f"modulus for degree {f} needs {f + 1} coefficients")
        if f < 1:
            raise ParseError("extension degree must be >= 1")
        return cls(p, f, modulus)

    def __str__(self) -> str:
        if self.f == 1 and self.modulus is None:
            return str(self.p)
        s = f"{self.p}^{self.f}"
        if self.modulus is not None:
            s += "/" + ",".join(str(c) for c in self.modulus)
        return s


class FieldCtx:
    """A fully tabulated finite field.  Immutable once built."""

    def __init__(self, spec: FieldSpec, cap: int = DEFAULT_CAP):
        p, f = spec.p, spec.f
        if p < 2 or not isprime(p):
            raise NonPrimeP(f"p = {p} is not prime")
        if f < 1:
            raise ParseError("extension degree must be >= 1")
        q = p**f
        if q > cap:
            raise CapExceeded(f"q = {q} exceeds field cap {cap}")
        if f == 1:
            modulus = (0, 1)
        elif spec.modulus is None:
            modulus = canonical_modulus(p, f)
        else:
            modulus = tuple(int(c) % p for c in spec.modulus)
            if len(modulus) != f + 1 or modulus[-1] != 1:
                raise ReducibleModulus("modulus must be monic of degree f")
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"{modulus} is reducible over F_{p}")

        self.spec = spec
        self.p, self.f, self.q, self.m = p, f, q, q - 1
        self.modulus = modulus
        self._pw = np.array([p**i for i in range(f)], dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        self.digits = (idx[:, None] // self._pw[None, :]) % p

        self.generator, exp = self._find_generator()
        self.exp_table = np.array(exp, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        log[self.exp_table] = np.arange(self.m, dtype=np.int64)
        self.log_table = log
        self.neg_table = ((-self.digits) % p) @ self._pw
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = self.exp_table[(-log[1:]) % self.m]
        self.inv_table = inv
        self.trace_table = self._trace_by_powers()

    # -- construction helpers ------------------------------------------------------

    def _encode(self, coeffs) -> int:
        return int(sum(int(c) * self.p**i for i, c in enumerate(coeffs)))

    def _poly_mul_enc(self, a: int, b: int) -> int:
        da = [int(c) for c in self.digits[a]]
        db = [int(c) for c in self.digits[b]]
        prod = _pmod(_pmul(_trim(da), _trim(db), self.p), list(self.modulus), self.p)
        return self._encode(prod)

    def _find_generator(self):
        if self.q == 2:
            return 1, [1]
        for g in range(2, self.q):
            seq = [1]
            x = g
            while x != 1:
                seq.append(x)
                x = self._poly_mul_enc(x, g)
                if len(seq) > self.m:
                    break
            if len(seq) == self.m:
                return g, seq
        raise AssertionError("multiplicative group is not cyclic")  # pragma: no cover

    def _trace_by_powers(self) -> np.ndarray:
        total = np.zeros(self.q, dtype=np.int64)
        nz = np.arange(1, self.q)
        logs = self.log_table[nz]
        for i in range(self.f):
            conj = self.exp_table[(logs * self.p**i) % self.m]
            total[nz] = self.add(total[nz], conj)
        return total

    # -- arithmetic ------------------------------------------------------------------

    def add(self, a, b):
        r = ((self.digits[a] + self.digits[b]) % self.p) @ self._pw
        return int(r) if np.ndim(r) == 0 else r

    def neg(self, a):
        r = self.neg_table[a]
        return int(r) if np.ndim(r) == 0 else r

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a)
        b = np.asarray(b)
        zero = (a == 0) | (b == 0)
        r = self.exp_table[(self.log_table[a] + self.log_table[b]) % self.m]
        r = np.where(zero, 0, r)
        return int(r) if r.ndim == 0 else r

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise InvertZero("0 has no inverse")
        r = self.inv_table[a]
        return int(r) if np.ndim(r) == 0 else r

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return int(self.exp_table[(int(self.log_table[a]) * e) % self.m])

    def element(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return int(n) % self.p

    def log(self, x):
        if np.any(np.asarray(x) == 0):
            raise LogOfZero("discrete log of 0")
        r = self.log_table[x]
        return int(r) if np.ndim(r) == 0 else r

    def trace(self, x):
        r = self.trace_table[x]
        return int(r) if np.ndim(r) == 0 else r

    def __repr__(self) -> str:
        return f"FieldCtx(q={self.q}, p={self.p}, f={self.f}, modulus={self.modulus}, generator={self.generator})"


@lru_cache(maxsize=64)
def _cached_field(spec: FieldSpec, cap: int) -> FieldCtx:
    return FieldCtx(spec, cap)


def construct_field(spec: FieldSpec | str | int, cap: int = DEFAULT_CAP) -> FieldCtx:
    """Build (or fetch from the in-process cache) the tabulated field for ``spec``."""
    if isinstance(spec, int):
        spec = FieldSpec(spec)
    elif isinstance(spec, str):
        spec = FieldSpec.parse(spec)
    return _cached_field(spec, cap)


def field_arith(field: FieldCtx, op: str, a: int, b: int | None = None) -> int:
    if op == "add":
        return field.add(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "neg":
        return field.neg(a)
    if op == "inv":
        return field.inv(a)
    raise ValueError(f"unknown field op {op!r}")


def discrete_log(field: FieldCtx, x: int) -> int:
    return field.log(x)


def trace(field: FieldCtx, x: int) -> int:
    return field.trace(x)


def kron_delta(x) -> int:
    """1 iff the field element ``x`` is zero."""
    r = (np.asarray(x) == 0).astype(np.int64)
    return int(r) if r.ndim == 0 else r
