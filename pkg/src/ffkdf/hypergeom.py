"""Hypergeometric character sums over a finite field.

Two layers live here.

:class:`Kernel` is a small vectorized toolkit over one of the value rings of
:mod:`ffkdf.rings`.  Characters are exponent arrays, summation indices are
extra leading axes, and every helper broadcasts over a batch of cases.  The
identity catalog is written against it.

The scalar functions (:func:`hyp_F`, :func:`nFm`, :func:`kdf_eval`, ...) take
:class:`~ffkdf.params.ParamMultiset` arguments and return exact
:class:`~ffkdf.cyclo.CycloValue` results.  :func:`kdf_eval` is a plain double
loop; :func:`weighted_double_sum` goes through the kernel, so the two can check
each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .characters import gauss_table, level
from .cyclo import CycloValue, cyc_root
from .field import FieldCtx
from .params import ParamMultiset
from .rings import Table, Vals, make_ring


class Kernel:
    """Batched character-sum primitives for one field, twist and ring."""

    def __init__(self, field: FieldCtx, ring: str = "mod", twist: int = 1, nprimes: int = 2):
        self.fld = field
        self.char, self.q, self.m = field.p, field.q, field.m
        self.N = N = level(field)
        self.twist = twist
        self.ring = R = make_ring(ring, N, nprimes)
        T = gauss_table(field, twist)
        sq = math.sqrt(self.q)
        if R.kind == "mod":
            ig, igc = R.inverse_table(T.g), R.inverse_table(T.gc)
        else:
            ig, igc = R.table(T.ginv), R.table(T.gcinv)
        self._g = Table(R, R.table(T.g), 1, sq)
        self._gc = Table(R, R.table(T.gc), 1, float(self.q))
        self._ig = Table(R, ig, self.q, 1.0)
        self._igc = Table(R, igc, self.q, 1.0)
        roots = [cyc_root(N, k) for k in range(N)] + [CycloValue(N)]
        self._root = Table(R, R.table(roots), 1, 1.0)
        self._log = field.log_table

    # -- characters ------------------------------------------------------------------

    def _j(self, j):
        return np.mod(j, self.m)

    def g(self, j) -> Vals:
        return self._g.take(self._j(j))

    def gc(self, j) -> Vals:
        return self._gc.take(self._j(j))

    def ig(self, j) -> Vals:
        return self._ig.take(self._j(j))

    def igc(self, j) -> Vals:
        return self._igc.take(self._j(j))

    def p(self, a, n) -> Vals:
        """(a)_n"""
        return self.g(a + n) * self.ig(a)

    def pc(self, a, n) -> Vals:
        """(a)°_n"""
        return self.gc(a + n) * self.igc(a)

    def ip(self, a, n) -> Vals:
        """1/(a)_n"""
        return self.g(a) * self.ig(a + n)

    def ipc(self, a, n) -> Vals:
        """1/(a)°_n"""
        return self.gc(a) * self.igc(a + n)

    def _prod(self, fn, items, n) -> Vals:
        out = self.one()
        for a in items:
            out = out * fn(a, n)
        return out

    def P(self, items, n) -> Vals:
        return self._prod(self.p, items, n)

    def PC(self, items, n) -> Vals:
        return self._prod(self.pc, items, n)

    def IP(self, items, n) -> Vals:
        return self._prod(self.ip, items, n)

    def IPC(self, items, n) -> Vals:
        return self._prod(self.ipc, items, n)

    def chi(self, j, z) -> Vals:
        """chi_j(z), with chi(0) = 0 for every character."""
        z = np.asarray(z)
        j = np.asarray(j)
        e = np.where(z == 0, self.N, (self.char * np.mod(j, self.m) * self._log[z]) % self.N)
        return self._root.take(e)

    def delta(self, j) -> np.ndarray:
        return (np.mod(j, self.m) == 0).astype(np.int64)

    @staticmethod
    def kron(z) -> np.ndarray:
        return (np.asarray(z) == 0).astype(np.int64)

    # -- rationals -------------------------------------------------------------------

    def one(self) -> Vals:
        return self.rat(1)

    def rat(self, n, d=1) -> Vals:
        r = Fraction(n, d)
        return Vals(self.ring, self.ring.rationals(r.numerator, r.denominator), r.denominator, abs(float(r)))

    def ints(self, arr) -> Vals:
        arr = np.asarray(arr, dtype=np.int64)
        return Vals(self.ring, self.ring.rationals(arr, 1), 1, float(np.max(np.abs(arr))) if arr.size else 0.0)

    def rats(self, num, den, den_lcm: int, bound: float) -> Vals:
        return Vals(self.ring, self.ring.rationals(num, den), den_lcm, bound)

    def qpow(self, e) -> Vals:
        """q**e for an integer array e (negative entries allowed)."""
        e = np.asarray(e, dtype=np.int64)
        hi = int(max(e.max(initial=0), 0))
        lo = int(max((-e).max(initial=0), 0))
        num = np.where(e > 0, self.q ** np.maximum(e, 0), 1)
        den = np.where(e < 0, self.q ** np.maximum(-e, 0), 1)
        return Vals(self.ring, self.ring.rationals(num, den), self.q**lo, float(self.q**hi))

    # -- summation axes --------------------------------------------------------------

    def axis(self, pos: int, naxes: int, batch_ndim: int = 1) -> np.ndarray:
        """arange(m) laid out along leading axis ``pos`` of ``naxes`` summation axes."""
        shape = [1] * (naxes + batch_ndim)
        shape[pos] = self.m
        return np.arange(self.m).reshape(shape)

    def fval(self, fv: Vals, j) -> Vals:
        """Look up a per-case weight table ``fv`` (shape (m, B)) at exponents ``j``."""
        j = np.mod(np.asarray(j), self.m)
        B = fv.shape[1]
        b = np.arange(B).reshape((1,) * (j.ndim - 1) + (B,)) if j.ndim else np.arange(B)
        return Vals(self.ring, fv.data[j, b], fv.den, fv.bound)

    # -- hypergeometric functions ----------------------------------------------------

    def F(self, A: Sequence, Bd: Sequence, z) -> Vals:
        """(1/(1-q)) sum_nu (A)_nu / (Bd)°_nu nu(z)"""
        nu = self.axis(0, 1)
        terms = self.P(A, nu) * self.IPC(Bd, nu) * self.chi(nu, z)
        return terms.sum(0) * Fraction(1, 1 - self.q)

    def nF(self, num: Sequence, den: Sequence, z) -> Vals:
        return self.F(list(num), [0] + list(den), z)

    def F10(self, a, z) -> Vals:
        return self.nF([a], [], z)

    def F21(self, a, b, c, z) -> Vals:
        return self.nF([a, b], [c], z)

    def F32(self, a, b, c, d, e, z) -> Vals:
        return self.nF([a, b, c], [d, e], z)

    def kdf(self, A, A2, B, B2, C, C2, x, y) -> Vals:
        """Two-variable double sum with parameter lists (a | a'), (b | b'), (c | c')."""
        nu, mu = self.axis(0, 2), self.axis(1, 2)
        nm = nu + mu
        t = self.P(A, nm) * self.IPC(A2, nm)
        t = t * self.P(B, nu) * self.IPC(list(B2) + [0], nu)
        t = t * self.P(C, mu) * self.IPC(list(C2) + [0], mu)
        t = t * self.chi(nu, x) * self.chi(mu, y)
        return t.sum((0, 1)) * Fraction(1, (1 - self.q) ** 2)


# -- scalar API ---------------------------------------------------------------------------


def _exps(items) -> list[int]:
    if isinstance(items, ParamMultiset):
        return items.members()
    return [getattr(a, "j", a) for a in items]


def _scalar_kernel(field: FieldCtx, backend: str, twist: int) -> Kernel:
    return _kernel_cache(field, backend, twist)


@lru_cache(maxsize=64)
def _kernel_cache(field, backend, twist):
    return Kernel(field, backend, twist)


def hyp_F(a: ParamMultiset, b: ParamMultiset, x: int, twist: int = 1, backend: str = "exact"):
    """F(a, b; x), summed directly over the q-1 characters."""
    F = a.field
    if backend == "float":
        K = _scalar_kernel(F, "float", twist)
        return complex(K.F(a.members(), b.members(), np.array([x])).data[0, 0])
    T = gauss_table(F, twist)
    N = level(F)
    total = CycloValue(N)
    if x == 0:
        return total
    lx = F.log(x)
    for nu in range(F.m):
        term = _ratio(a, b, nu, T)
        total = total + term * CycloValue.from_exponents(N, {F.p * nu * lx: 1})
    return total * Fraction(1, 1 - F.q)


def _ratio(a: ParamMultiset, b: ParamMultiset, nu: int, T) -> CycloValue:
    m = a.field.m
    out = CycloValue.rational(T.level, 1)
    for j in a.members():
        out = out * T.g[(j + nu) % m] * T.ginv[j]
    for j in b.members():
        out = out * T.gc[j] * T.gcinv[(j + nu) % m]
    return out


def nFm(num, den, x: int, field: FieldCtx | None = None, twist: int = 1, backend: str = "exact"):
    """F with the trivial character adjoined to the lower parameters."""
    fld = field or _field_of(num, den)
    a = ParamMultiset(fld, _exps(num))
    b = ParamMultiset(fld, [0] + _exps(den))
    return hyp_F(a, b, x, twist, backend)


def _field_of(*groups):
    for g in groups:
        if isinstance(g, ParamMultiset):
            return g.field
        for c in g:
            if hasattr(c, "field"):
                return c.field
    raise ValueError("cannot infer the field; pass field=")


@dataclass(frozen=True)
class KdFParams:
    a: ParamMultiset
    b: ParamMultiset
    c: ParamMultiset
    ap: ParamMultiset
    bp: ParamMultiset
    cp: ParamMultiset

    def __post_init__(self):
        fields = {id(ms.field) for ms in (self.a, self.b, self.c, self.ap, self.bp, self.cp)}
        if len(fields) != 1:
            from .errors import FieldMismatch

            raise FieldMismatch("parameters over different fields")

    @property
    def field(self) -> FieldCtx:
        return self.a.field

    def degrees(self) -> tuple[int, ...]:
        return tuple(ms.degree() for ms in (self.a, self.b, self.c, self.ap, self.bp, self.cp))

    def psi_free(self) -> bool:
        """Degree balance under which values do not depend on the additive character."""
        A, B, C, A2, B2, C2 = self.degrees()
        return A + B == A2 + B2 + 1 and A + C == A2 + C2 + 1


def kdf_eval(params: KdFParams, x: int, y: int, twist: int = 1) -> CycloValue:
    """The two-variable function by a literal loop over all character pairs."""
    F = params.field
    T = gauss_table(F, twist)
    N, m, p = T.level, F.m, F.p
    zero = CycloValue(N)
    if x == 0 or y == 0:
        return zero
    lx, ly = F.log(x), F.log(y)
    total = zero
    a, b, c = params.a.members(), params.b.members(), params.c.members()
    ap, bp, cp = params.ap.members(), params.bp.members(), params.cp.members()
    for nu in range(m):
        for mu in range(m):
            term = CycloValue.from_exponents(N, {p * (nu * lx + mu * ly): 1})
            for j in a:
                term = term * T.g[(j + nu + mu) % m] * T.ginv[j]
            for j in b:
                term = term * T.g[(j + nu) % m] * T.ginv[j]
            for j in c:
                term = term * T.g[(j + mu) % m] * T.ginv[j]
            # variant symbols in the denominator: g°(j) / g°(j + shift)
            for j in ap:
                term = term * T.gc[j] * T.gcinv[(j + nu + mu) % m]
            for j in bp + [0]:
                term = term * T.gc[j] * T.gcinv[(j + nu) % m]
            for j in cp + [0]:
                term = term * T.gc[j] * T.gcinv[(j + mu) % m]
            total = total + term
    return total * Fraction(1, (1 - F.q) ** 2)


@dataclass(frozen=True)
class FactorSpec:
    """One Pochhammer factor of a weighted double sum.

    ``slot`` is ``"nu"``, ``"mu"`` or ``"numu"``; ``position`` is ``"num"``
    (plain symbol in the numerator) or ``"den"`` (variant symbol in the
    denominator).
    """

    multiset: ParamMultiset
    slot: str
    position: str

    def __post_init__(self):
        if self.slot not in ("nu", "mu", "numu"):
            raise ValueError(f"bad slot {self.slot!r}")
        if self.position not in ("num", "den"):
            raise ValueError(f"bad position {self.position!r}")


@dataclass
class WeightFn:
    """A map from characters to values, given as a table indexed by exponent."""

    values: list = dc_field(default_factory=list)

    @classmethod
    def constant(cls, field: FieldCtx, c=1) -> "WeightFn":
        return cls([c] * field.m)

    def __call__(self, j: int):
        return self.values[j % len(self.values)]


def kdf_factors(params: KdFParams) -> list[FactorSpec]:
    """The factor list that turns a weighted double sum into the KdF sum."""
    F = params.field
    eps = ParamMultiset(F, [0])
    return [
        FactorSpec(params.a, "numu", "num"),
        FactorSpec(params.b, "nu", "num"),
        FactorSpec(params.c, "mu", "num"),
        FactorSpec(params.ap, "numu", "den"),
        FactorSpec(params.bp + eps, "nu", "den"),
        FactorSpec(params.cp + eps, "mu", "den"),
    ]


def _weight_vals(K: Kernel, w: WeightFn) -> Vals:
    R = K.ring
    vals = [v if isinstance(v, CycloValue) else Fraction(v) for v in w.values]
    den = 1
    bound = 0.0
    for v in vals:
        if isinstance(v, CycloValue):
            den = math.lcm(den, v.den)
            bound = max(bound, sum(abs(c) for c in v.num.values()) / v.den)
        else:
            den = math.lcm(den, v.denominator)
            bound = max(bound, abs(float(v)))
    return Vals(R, R.table(vals).reshape(K.m, 1, R.R), den, bound)


def _result(v: Vals, backend: str):
    if backend == "float":
        return complex(v.data.reshape(-1)[0])
    return v.to_cyclo()


def weighted_double_sum(f: WeightFn, factors: Sequence[FactorSpec], x: int, y: int, scale=1,
                        twist: int = 1, backend: str = "exact"):
    """scale * sum_{nu,mu} f(mu) [factors] nu(x) mu(y)."""
    field = factors[0].multiset.field if factors else None
    if field is None:
        raise ValueError("need at least one factor to fix the field")
    K = _scalar_kernel(field, backend, twist)
    nu, mu = K.axis(0, 2), K.axis(1, 2)
    idx = {"nu": nu, "mu": mu, "numu": nu + mu}
    wv = _weight_vals(K, f)
    t = Vals(K.ring, wv.data[np.mod(mu, K.m), 0], wv.den, wv.bound)
    for fs in factors:
        fn = K.P if fs.position == "num" else K.IPC
        t = t * fn(fs.multiset.members(), idx[fs.slot])
    t = t * K.chi(nu, np.array([x])) * K.chi(mu, np.array([y]))
    return _result(t.sum((0, 1)) * Fraction(scale), backend)


def weighted_single_sum(w: WeightFn, factors: Sequence, x: int, scale=1, field: FieldCtx | None = None,
                        twist: int = 1, backend: str = "exact"):
    """scale * sum_eta w(eta) [factors] eta(x); factors are (multiset, "num"|"den") pairs."""
    if field is None:
        if not factors:
            raise ValueError("pass field= when there are no factors")
        field = factors[0][0].field
    K = _scalar_kernel(field, backend, twist)
    eta = K.axis(0, 1)
    wv = _weight_vals(K, w)
    t = Vals(K.ring, wv.data[np.mod(eta, K.m), 0], wv.den, wv.bound)
    for ms, pos in factors:
        fn = K.P if pos == "num" else K.IPC
        t = t * fn(ms.members(), eta)
    t = t * K.chi(eta, np.array([x]))
    return _result(t.sum(0) * Fraction(scale), backend)
