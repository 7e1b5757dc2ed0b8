"""Finite multisets of characters: the parameters of hypergeometric sums."""
from __future__ import annotations

import re
from collections import Counter

from .characters import MultChar, gauss_table
from .cyclo import CycloValue
from .errors import FieldMismatch, ParseError
from .field import FieldCtx

_ITEM_RE = re.compile(r"^\s*(-?\d+)\s*(?:\^\s*(\d+))?\s*$")


class ParamMultiset:
    """Multiset of character exponents mod q-1, with nonnegative multiplicities."""

    __slots__ = ("field", "counts")

    def __init__(self, field: FieldCtx, members=()):
        self.field = field
        c: Counter = Counter()
        for mbr in members:
            j = mbr.j if isinstance(mbr, MultChar) else int(mbr)
            c[j % field.m] += 1
        self.counts = c

    @classmethod
    def from_counts(cls, field: FieldCtx, counts: dict[int, int]) -> "ParamMultiset":
        out = cls(field)
        for j, k in counts.items():
            if k < 0:
                raise ValueError("multiplicities must be nonnegative")
            if k:
                out.counts[j % field.m] += k
        return out

    @classmethod
    def parse(cls, field: FieldCtx, text: str) -> "ParamMultiset":
        """``"1,3^2"`` is chi_1 + 2 chi_3; ``"-"`` (or blank) is empty."""
        text = text.strip()
        if text in ("", "-"):
            return cls(field)
        counts: Counter = Counter()
        for item in text.split(","):
            mt = _ITEM_RE.match(item)
            if not mt:
                raise ParseError(f"bad multiset item {item!r} in {text!r}")
            counts[int(mt.group(1)) % field.m] += int(mt.group(2) or 1)
        return cls.from_counts(field, counts)

    def members(self) -> list[int]:
        """Exponents sorted, repeated by multiplicity."""
        return [j for j in sorted(self.counts) for _ in range(self.counts[j])]

    def degree(self) -> int:
        return sum(self.counts.values())

    def _check(self, other):
        if other.field is not self.field:
            raise FieldMismatch("multisets over different fields")

    def __add__(self, other: "ParamMultiset") -> "ParamMultiset":
        self._check(other)
        return ParamMultiset.from_counts(self.field, self.counts + other.counts)

    def pairing(self, other: "ParamMultiset") -> int:
        self._check(other)
        return sum(k * other.counts.get(j, 0) for j, k in self.counts.items())

    def twist(self, phi: MultChar | int) -> "ParamMultiset":
        s = phi.j if isinstance(phi, MultChar) else int(phi)
        return ParamMultiset.from_counts(self.field, {j + s: k for j, k in self.counts.items()})

    def poch(self, nu: MultChar | int, twist: int = 1) -> CycloValue:
        return _ms_poch(self, nu, gauss_table(self.field, twist).g, gauss_table(self.field, twist).ginv)

    def poch_variant(self, nu: MultChar | int, twist: int = 1) -> CycloValue:
        return _ms_poch(self, nu, gauss_table(self.field, twist).gc, gauss_table(self.field, twist).gcinv)

    def __eq__(self, other):
        if not isinstance(other, ParamMultiset):
            return NotImplemented
        return self.field is other.field and +self.counts == +other.counts

    def __hash__(self):
        return hash(tuple(self.members()))

    def __str__(self):
        if not self.counts:
            return "-"
        return ",".join(str(j) if k == 1 else f"{j}^{k}" for j, k in sorted(self.counts.items()) if k)

    def __repr__(self):
        return f"ParamMultiset({self})"


def _ms_poch(A: ParamMultiset, nu, top, inv) -> CycloValue:
    n = nu.j if isinstance(nu, MultChar) else int(nu)
    m = A.field.m
    out = CycloValue.rational(top[0].level, 1)
    for j, k in A.counts.items():
        factor = top[(j + n) % m] * inv[j]
        for _ in range(k):
            out = out * factor
    return out


def ms_degree(A: ParamMultiset) -> int:
    return A.degree()


def ms_pairing(A: ParamMultiset, B: ParamMultiset) -> int:
    return A.pairing(B)


def ms_twist(A: ParamMultiset, phi: MultChar | int) -> ParamMultiset:
    return A.twist(phi)


def ms_poch(A: ParamMultiset, nu: MultChar | int, twist: int = 1) -> CycloValue:
    return A.poch(nu, twist)


def ms_poch_variant(A: ParamMultiset, nu: MultChar | int, twist: int = 1) -> CycloValue:
    return A.poch_variant(nu, twist)
