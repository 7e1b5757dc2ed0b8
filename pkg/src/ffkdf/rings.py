"""Value rings for batched character-sum evaluation.

Every ring stores an element of Q(zeta_N) as a numpy array whose last axis
has a ring-specific width ``R``; all leading axes are batch or summation axes
and broadcast the usual numpy way.

``ExactRing``
    object arrays of :class:`CycloValue`, ``R = 1``.  Slow, authoritative.
``ModRing``
    int64 residues.  For each prime ``l = 1 mod N`` and each unit ``k`` mod N
    there is a column holding the image under ``zeta -> w^k mod l``, where
    ``w`` has order exactly N.  Zero in every column of one prime means the
    element lies in ``l * Z[zeta]``; with a known bound on all complex
    conjugates and a known denominator that pins it to zero exactly.
``FloatRing``
    complex128 at ``zeta = exp(2 pi i / N)``, ``R = 1``.

:class:`Vals` wraps an array together with a denominator ``den`` (``den * v``
is an algebraic integer) and a ``bound`` on ``|sigma(v)|`` over all complex
embeddings.  ModRing uses both to certify that a difference is zero.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import numpy as np
from sympy import isprime, primefactors

from .cyclo import CycloValue, degree

PRIME_CEILING = 1 << 31


class Uncertified(ArithmeticError):
    """All residues vanish but the bound is too large to conclude equality."""

    def __init__(self, bits_needed: float):
        super().__init__(f"need about {bits_needed:.0f} bits of modulus")
        self.bits_needed = bits_needed


# -- ring implementations --------------------------------------------------------------


class ExactRing:
    kind = "exact"
    R = 1

    def __init__(self, N: int):
        self.N = N

    def table(self, values) -> np.ndarray:
        out = np.empty((len(values), 1), dtype=object)
        for i, v in enumerate(values):
            out[i, 0] = v if isinstance(v, CycloValue) else CycloValue.rational(self.N, v)
        return out

    def rationals(self, num, den=1) -> np.ndarray:
        num, den = np.broadcast_arrays(np.asarray(num), np.asarray(den))
        out = np.empty(num.shape + (1,), dtype=object)
        for idx in np.ndindex(num.shape):
            out[idx + (0,)] = CycloValue.rational(self.N, Fraction(int(num[idx]), int(den[idx])))
        return out

    def mul(self, a, b):
        return a * b

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sum(self, a, axis):
        return np.sum(a, axis=axis)

    def zeros(self, shape):
        return self.rationals(np.zeros(shape, dtype=np.int64))

    def is_zero(self, v: "Vals") -> np.ndarray:
        return np.vectorize(lambda c: c.is_zero() if isinstance(c, CycloValue) else c == 0, otypes=[bool])(
            v.data[..., 0]
        )

    def to_cyclo(self, data) -> CycloValue:
        c = data[..., 0].item() if hasattr(data, "shape") else data
        return c if isinstance(c, CycloValue) else CycloValue.rational(self.N, c)


class FloatRing:
    kind = "float"
    R = 1
    tol = 1e-9

    def __init__(self, N: int):
        self.N = N

    def table(self, values) -> np.ndarray:
        return np.array(
            [[v.to_complex() if isinstance(v, CycloValue) else complex(Fraction(v))] for v in values],
            dtype=np.complex128,
        )

    def rationals(self, num, den=1) -> np.ndarray:
        return (np.asarray(num, dtype=np.float64) / np.asarray(den, dtype=np.float64)).astype(np.complex128)[..., None]

    def mul(self, a, b):
        return a * b

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sum(self, a, axis):
        return np.sum(a, axis=axis)

    def zeros(self, shape):
        return np.zeros(tuple(shape) + (1,), dtype=np.complex128)

    def is_zero(self, v: "Vals") -> np.ndarray:
        return np.abs(v.data[..., 0]) <= self.tol * max(1.0, v.bound)

    def to_cyclo(self, data):
        raise TypeError("float values cannot be converted to exact ones")


@lru_cache(maxsize=None)
def _primes_for_level(N: int, count: int) -> tuple[tuple[int, int], ...]:
    """``count`` primes l = 1 mod N below 2^31 (largest first), each with an element of order N."""
    out = []
    k = (PRIME_CEILING - 2) // N
    factors = primefactors(N) if N > 1 else []
    while len(out) < count:
        ell = k * N + 1
        k -= 1
        if k <= 0:
            raise ArithmeticError(f"ran out of primes for level {N}")
        if not isprime(ell):
            continue
        for h in range(2, ell):
            w = pow(h, (ell - 1) // N, ell)
            if all(pow(w, N // r, ell) != 1 for r in factors) and (N > 1 or w == 1):
                out.append((ell, w))
                break
    return tuple(out)


class ModRing:
    kind = "mod"

    def __init__(self, N: int, nprimes: int = 2):
        self.N = N
        self.nprimes = nprimes
        units = [k for k in range(1, N + 1) if math.gcd(k, N) == 1] if N > 1 else [1]
        self.units = units
        ells, omegas = [], []
        for ell, w in _primes_for_level(N, nprimes):
            for k in units:
                ells.append(ell)
                omegas.append(pow(w, k, ell))
        self.ell = np.array(ells, dtype=np.int64)
        self.R = len(ells)
        self.modulus_bits = sum(math.log2(ell) for ell, _ in _primes_for_level(N, nprimes))
        d = degree(N)
        # zeta^e at each column, for e < deg Phi_N
        self._pw = [[pow(w, e, int(l)) for w, l in zip(omegas, ells)] for e in range(max(d, 1))]

    def _image(self, v: CycloValue) -> list[int]:
        out = []
        for col, ell in enumerate(self.ell.tolist()):
            s = 0
            for e, c in v.num.items():
                s += (c % ell) * self._pw[e][col]
            out.append(s * pow(v.den, -1, ell) % ell)
        return out

    def table(self, values) -> np.ndarray:
        rows = []
        for v in values:
            if not isinstance(v, CycloValue):
                v = CycloValue.rational(self.N, v)
            rows.append(self._image(v))
        return np.array(rows, dtype=np.int64).reshape(len(values), self.R)

    def inverse_table(self, values) -> np.ndarray:
        """Columnwise modular inverses of the images of ``values``."""
        t = self.table(values)
        out = np.empty_like(t)
        for col, ell in enumerate(self.ell.tolist()):
            out[:, col] = [pow(int(a), -1, ell) for a in t[:, col]]
        return out

    def rationals(self, num, den=1) -> np.ndarray:
        if isinstance(num, int) and isinstance(den, int):
            return np.array([num % l * pow(den, -1, l) % l for l in self.ell.tolist()], dtype=np.int64)
        num = np.asarray(num, dtype=np.int64)
        den = np.asarray(den, dtype=np.int64)
        ell = self.ell
        nres = num[..., None] % ell
        # inverses of small denominators by lookup
        dens = np.unique(den)
        inv = {int(d): np.array([pow(int(d), -1, int(l)) for l in ell], dtype=np.int64) for d in dens.tolist()}
        if den.ndim == 0:
            dres = inv[int(den)]
        else:
            lut = np.stack([inv[int(d)] for d in dens.tolist()])
            dres = lut[np.searchsorted(dens, den)]
        return nres * dres % ell

    def mul(self, a, b):
        return a * b % self.ell

    def add(self, a, b):
        return (a + b) % self.ell

    def neg(self, a):
        return (self.ell - a) % self.ell

    def sum(self, a, axis):
        return np.sum(a, axis=axis) % self.ell

    def zeros(self, shape):
        return np.zeros(tuple(shape) + (self.R,), dtype=np.int64)

    def is_zero(self, v: "Vals") -> np.ndarray:
        zero = np.all(v.data == 0, axis=-1)
        if zero.any():
            bits = math.log2(max(v.den, 1)) + (math.log2(v.bound) if v.bound > 0 else 0.0)
            if not bits < self.modulus_bits:
                raise Uncertified(bits)
        return zero

    def to_cyclo(self, data):
        raise TypeError("residues cannot be converted to exact values")


def make_ring(kind: str, N: int, nprimes: int = 2):
    if kind == "exact":
        return ExactRing(N)
    if kind == "float":
        return FloatRing(N)
    if kind == "mod":
        return ModRing(N, nprimes)
    raise ValueError(f"unknown ring {kind!r}")


# -- values with bookkeeping ----------------------------------------------------------


class Vals:
    """Ring array plus a denominator and an absolute bound valid in every embedding."""

    __slots__ = ("ring", "data", "den", "bound")
    __array_priority__ = 100

    def __init__(self, ring, data, den: int = 1, bound: float = 1.0):
        self.ring = ring
        self.data = data
        self.den = den
        self.bound = bound

    @property
    def shape(self):
        return self.data.shape[:-1]

    def _lift(self, other) -> "Vals":
        if isinstance(other, Vals):
            return other
        if isinstance(other, Rational):
            r = Fraction(other)
            return Vals(self.ring, self.ring.rationals(r.numerator, r.denominator), r.denominator, abs(float(r)))
        raise TypeError(f"cannot combine values with {type(other).__name__}")

    def __mul__(self, other):
        o = self._lift(other)
        return Vals(self.ring, self.ring.mul(self.data, o.data), self.den * o.den, self.bound * o.bound)

    __rmul__ = __mul__

    def __add__(self, other):
        o = self._lift(other)
        return Vals(self.ring, self.ring.add(self.data, o.data), math.lcm(self.den, o.den), self.bound + o.bound)

    __radd__ = __add__

    def __neg__(self):
        return Vals(self.ring, self.ring.neg(self.data), self.den, self.bound)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __getitem__(self, idx):
        return Vals(self.ring, self.data[idx], self.den, self.bound)

    def sum(self, axis=0) -> "Vals":
        axes = (axis,) if isinstance(axis, int) else tuple(axis)
        n = 1
        for ax in axes:
            n *= self.data.shape[ax]
        return Vals(self.ring, self.ring.sum(self.data, axes), self.den, self.bound * n)

    def broadcast_to(self, shape) -> "Vals":
        return Vals(self.ring, np.broadcast_to(self.data, tuple(shape) + self.data.shape[-1:]), self.den, self.bound)

    def is_zero(self) -> np.ndarray:
        return self.ring.is_zero(self)

    def equals(self, other) -> np.ndarray:
        return (self - other).is_zero()

    def to_cyclo(self) -> CycloValue:
        return self.ring.to_cyclo(self.data)

    def to_complex(self):
        if self.ring.kind == "float":
            return self.data[..., 0]
        if self.ring.kind == "exact":
            return np.vectorize(lambda c: c.to_complex() if isinstance(c, CycloValue) else complex(c))(self.data[..., 0])
        raise TypeError("residues have no complex value")


def where(cond, a: Vals, b: Vals) -> Vals:
    cond = np.asarray(cond)[..., None]
    ring = a.ring
    return Vals(ring, np.where(cond, a.data, b.data), math.lcm(a.den, b.den), max(a.bound, b.bound))


def stack(values: list[Vals], axis: int = 0) -> Vals:
    ring = values[0].ring
    shape = np.broadcast_shapes(*(v.shape for v in values))
    datas = [np.broadcast_to(v.data, shape + v.data.shape[-1:]) for v in values]
    den = 1
    for v in values:
        den = math.lcm(den, v.den)
    return Vals(ring, np.stack(datas, axis=axis), den, max(v.bound for v in values))


class Table:
    """A lookup table of ring values indexed by an integer array."""

    def __init__(self, ring, data: np.ndarray, den: int, bound: float):
        self.ring, self.data, self.den, self.bound = ring, data, den, bound

    def take(self, idx) -> Vals:
        return Vals(self.ring, self.data[np.asarray(idx)], self.den, self.bound)
