"""Multiplicative and additive characters, Gauss sums and Pochhammer symbols.

Characters of the cyclic group F_q^* are indexed by an exponent ``j`` mod
``q-1`` against the field's canonical generator ``g``::

    chi_j(g^k) = zeta_{q-1}^{jk},    chi_j(0) = 0

Values live at the common level ``N = p(q-1)``, where ``zeta_p = zeta_N^(q-1)``
and ``zeta_{q-1} = zeta_N^p``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloValue, cyc_root
from .errors import FieldMismatch
from .field import FieldCtx


def level(field: FieldCtx) -> int:
    return field.p * field.m


@dataclass(frozen=True)
class MultChar:
    field: FieldCtx
    j: int

    def __post_init__(self):
        object.__setattr__(self, "j", self.j % self.field.m)

    def _check(self, other: "MultChar"):
        if other.field is not self.field:
            raise FieldMismatch("characters of different fields")

    def __mul__(self, other: "MultChar") -> "MultChar":
        self._check(other)
        return MultChar(self.field, self.j + other.j)

    def __truediv__(self, other: "MultChar") -> "MultChar":
        self._check(other)
        return MultChar(self.field, self.j - other.j)

    def __pow__(self, e: int) -> "MultChar":
        return MultChar(self.field, self.j * e)

    def conj(self) -> "MultChar":
        return MultChar(self.field, -self.j)

    @property
    def is_trivial(self) -> bool:
        return self.j == 0

    def __call__(self, x: int) -> CycloValue:
        return char_eval(self, x)

    def __repr__(self):
        return f"chi_{self.j}"


def trivial(field: FieldCtx) -> MultChar:
    return MultChar(field, 0)


def quadratic(field: FieldCtx) -> MultChar:
    if field.p == 2:
        raise ValueError("no quadratic character in characteristic 2")
    return MultChar(field, field.m // 2)


@dataclass(frozen=True)
class AddChar:
    field: FieldCtx
    c: int = 1

    def __post_init__(self):
        if self.c == 0 or not 0 < self.c < self.field.q:
            raise ValueError("additive twist must be a nonzero field element")

    def __call__(self, x: int) -> CycloValue:
        return add_char_eval(self, x)


def char_eval(chi: MultChar, x: int) -> CycloValue:
    F = chi.field
    N = level(F)
    if x == 0:
        return CycloValue(N)
    return cyc_root(N, F.p * chi.j * F.log(x))


def add_char_eval(psi: AddChar, x: int) -> CycloValue:
    F = psi.field
    return cyc_root(level(F), F.m * F.trace(F.mul(psi.c, x)))


def delta_fn(chi: MultChar) -> int:
    return int(chi.j == 0)


class GaussTable:
    """g(chi_j), g°(chi_j) and their inverses for every j, under one twist."""

    def __init__(self, field: FieldCtx, twist: int = 1):
        self.field = field
        self.twist = twist
        self.level = N = level(field)
        p, m, q = field.p, field.m, field.q
        ks = range(m)
        xs = [int(field.exp_table[k]) for k in ks]
        tr = [field.m * field.trace(field.mul(twist, x)) for x in xs]
        self.g = []
        for j in range(m):
            terms: dict[int, int] = {}
            for k, t in zip(ks, tr):
                e = (p * j * k + t) % N
                terms[e] = terms.get(e, 0) - 1
            self.g.append(CycloValue.from_exponents(N, terms))
        self.gc = [self.g[0] * q] + self.g[1:]
        self._ginv = None
        self._gcinv = None

    @property
    def ginv(self) -> list[CycloValue]:
        if self._ginv is None:
            self._ginv = [v.inverse() for v in self.g]
        return self._ginv

    @property
    def gcinv(self) -> list[CycloValue]:
        if self._gcinv is None:
            q = self.field.q
            self._gcinv = [self.ginv[0] * Fraction(1, q)] + self.ginv[1:]
        return self._gcinv

    def __len__(self):
        return len(self.g)


@lru_cache(maxsize=128)
def gauss_table(field: FieldCtx, twist: int = 1) -> GaussTable:
    return GaussTable(field, twist)


def _psi_twist(chi: MultChar, psi: AddChar | None) -> int:
    if psi is None:
        return 1
    if psi.field is not chi.field:
        raise FieldMismatch("characters of different fields")
    return psi.c


def gauss_sum(chi: MultChar, psi: AddChar | None = None) -> CycloValue:
    return gauss_table(chi.field, _psi_twist(chi, psi)).g[chi.j]


def gauss_variant(chi: MultChar, psi: AddChar | None = None) -> CycloValue:
    return gauss_table(chi.field, _psi_twist(chi, psi)).gc[chi.j]


def poch(alpha: MultChar, nu: MultChar, psi: AddChar | None = None) -> CycloValue:
    T = gauss_table(alpha.field, _psi_twist(alpha, psi))
    return T.g[(alpha * nu).j] * T.ginv[alpha.j]


def poch_variant(alpha: MultChar, nu: MultChar, psi: AddChar | None = None) -> CycloValue:
    T = gauss_table(alpha.field, _psi_twist(alpha, psi))
    return T.gc[(alpha * nu).j] * T.gcinv[alpha.j]
