"""Registry of checkable identities between character sums.

Each :class:`IdentityDef` names its free characters (``slots``), a vectorized
admissibility predicate over those characters, the argument domain, and two
evaluators written against :class:`~ffkdf.hypergeom.Kernel`.  Evaluators take
``(K, c, X, fv)``: the kernel, a namespace of exponent arrays (one per slot,
all of shape ``(B,)``), a namespace of argument arrays ``x``/``y`` and, for
identities quantified over an arbitrary weight ``f``, an ``(m, B)`` table of
weights.  They return a :class:`~ffkdf.rings.Vals` or a tuple of them.

Slot names: ``a, b, c`` are alpha, beta, gamma; ``u`` is mu; ``n`` is nu;
``d`` and ``r`` are phi and rho in the two-character side conditions; ``s``
and ``t`` are sigma and tau.  ``PH`` below is the exponent of the quadratic
character.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import NotFound
from .rings import where

# -- predicates ---------------------------------------------------------------------------


def pair(m, X, Y):
    """Bilinear pairing of two lists of exponent arrays: sum of [x_i = y_j]."""
    tot = 0
    for x in X:
        for y in Y:
            tot = tot + (np.mod(np.asarray(x) - np.asarray(y), m) == 0)
    return tot


def _msets_equal(m, X, Y):
    xs = np.sort(np.mod(np.stack(np.broadcast_arrays(*X)), m), axis=0)
    ys = np.sort(np.mod(np.stack(np.broadcast_arrays(*Y)), m), axis=0)
    return np.all(xs == ys, axis=0)


# -- argument domains ---------------------------------------------------------------------


def _elements(F, exclude=()):
    xs = np.arange(F.q)
    return xs[~np.isin(xs, list(exclude))]


def args_none(F):
    return np.zeros((1, 2), dtype=np.int64)


args_none.names = ()


def args_x(exclude):
    def build(F):
        xs = _elements(F, [e for e in exclude if e is not None])
        return np.stack([xs, np.zeros_like(xs)], axis=1)

    build.names = ("x",)
    return build


def args_xy(x_exclude, y_exclude):
    def build(F):
        xs = _elements(F, x_exclude)
        ys = _elements(F, y_exclude)
        gx, gy = np.meshgrid(xs, ys, indexing="ij")
        return np.stack([gx.ravel(), gy.ravel()], axis=1)

    build.names = ("x", "y")
    return build


ARGS_NONE = args_none
ARGS_X_ALL = args_x(())
ARGS_X_NZ = args_x((0,))
ARGS_X_NE1 = args_x((1,))
ARGS_X_NOT01 = args_x((0, 1))
ARGS_THM = args_xy((0, 1), ())
ARGS_X_NOT01_Y_NZ = args_xy((0, 1), (0,))
ARGS_XY_NZ = args_xy((0,), (0,))


@dataclass(frozen=True)
class IdentityDef:
    id: str
    anchor: str
    slots: tuple[str, ...]
    lhs: Callable
    rhs: Callable
    constraint: Callable | None = None
    args: Callable = args_none
    needs_f: bool = False
    needs_odd_q: bool = False
    fixture: bool = False
    restates: str | None = None
    constraint_text: str = ""
    domain_text: str = ""

    def admissible(self, m: int, c) -> np.ndarray:
        if self.constraint is None:
            return np.ones(np.shape(getattr(c, self.slots[0])), dtype=bool)
        return np.asarray(self.constraint(m, c), dtype=bool)

    @property
    def arg_names(self) -> tuple[str, ...]:
        return self.args.names

    def summary(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "slots": list(self.slots),
            "constraint": self.constraint_text or "none",
            "domain": self.domain_text or "none",
            "needs_f": self.needs_f,
            "needs_odd_q": self.needs_odd_q,
            "restates": self.restates,
        }


_REGISTRY: dict[str, IdentityDef] = {}


def _register(**kw):
    d = IdentityDef(**kw)
    if d.id in _REGISTRY:
        raise ValueError(f"duplicate identity {d.id}")
    _REGISTRY[d.id] = d
    return d


def list_identities(include_fixtures: bool = False) -> list[IdentityDef]:
    return [d for d in _REGISTRY.values() if include_fixtures or not d.fixture]


def lookup(identity_id: str) -> IdentityDef:
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise NotFound(f"unknown identity {identity_id!r}") from None


# -- shared pieces ------------------------------------------------------------------------


def _sq1q(K):
    return Fraction((1 - K.q) ** 2)


def _PH(K):
    return K.m // 2


def _el(K, n):
    """Integer n as a field element, broadcast-friendly."""
    return K.fld.element(n)


def _half(K):
    return K.fld.inv(2)


def _neg1(K):
    return K.fld.neg(1)


def _one_minus(K, x):
    return K.fld.sub(1, x)


def _pfaff_arg(K, x):
    """x/(x-1)"""
    return K.fld.div(x, K.fld.sub(x, 1))


def _chisum(K, fn):
    """sum over chi with chi^2 = 1 of fn(chi)."""
    out = fn(0)
    if K.char != 2:
        out = out + fn(_PH(K))
    return out


def _ints(K, arr):
    return K.ints(arr)


# ========================================================================================
# one-variable formulas
# ========================================================================================

_register(
    id="BASE-01",
    anchor="reflection formula for Gauss sums",
    slots=("a",),
    lhs=lambda K, c, X, fv: K.g(c.a) * K.gc(-c.a),
    rhs=lambda K, c, X, fv: K.chi(c.a, _neg1(K)) * K.q,
)

_register(
    id="BASE-02",
    anchor="reflection formula for Pochhammer symbols",
    slots=("a", "n"),
    lhs=lambda K, c, X, fv: K.p(c.a, c.n) * K.pc(-c.a, -c.n),
    rhs=lambda K, c, X, fv: K.chi(c.n, _neg1(K)),
)

_register(
    id="BASE-03",
    anchor="transitivity of Pochhammer symbols, plain and variant",
    slots=("a", "n", "u"),
    lhs=lambda K, c, X, fv: (K.p(c.a, c.n + c.u), K.pc(c.a, c.n + c.u)),
    rhs=lambda K, c, X, fv: (K.p(c.a, c.n) * K.p(c.a + c.n, c.u), K.pc(c.a, c.n) * K.pc(c.a + c.n, c.u)),
)


def _shift_rhs(K, c, X, fv):
    A, B = [c.a, c.n], [c.b]
    pre = K.P(A, c.d) * K.IPC(B, c.d) * K.chi(c.d, X.x)
    return pre * K.F([a + c.d for a in A], [b + c.d for b in B], X.x)


_register(
    id="BASE-04",
    anchor="shift formula F(a,b;x) = (a)_phi/(b)°_phi phi(x) F(a phi, b phi; x)",
    slots=("a", "n", "b", "d"),
    lhs=lambda K, c, X, fv: K.F([c.a, c.n], [c.b], X.x),
    rhs=_shift_rhs,
    args=ARGS_X_ALL,
    domain_text="x in k",
)


def _cancel_rhs(K, c, X, fv):
    q = K.q
    G = [c.g, c.h]
    nu = K.axis(0, 1)
    k = pair(K.m, G, [nu])  # (gamma, nu) per summand
    # (1 - q^-k)/(1 - q^-1) = (q^k - 1) / ((q - 1) q^(k-1)) for k >= 1, 0 for k = 0
    num = np.where(k > 0, q**k - 1, 0)
    den = np.where(k > 0, (q - 1) * q ** np.maximum(k - 1, 0), 1)
    w = K.rats(num, den, (q - 1) * q, 2.0)
    corr = (w * K.p(c.a, -nu) * K.ipc(c.b, -nu) * K.chi(-nu, X.x)).sum(0)
    k0 = pair(K.m, G, [0])
    return K.qpow(k0) * (K.F([c.a], [c.b], X.x) + corr * Fraction(1, q))


_register(
    id="BASE-05",
    anchor="cancellation formula for F(a + g, b + g; x)",
    slots=("a", "b", "g", "h"),
    lhs=lambda K, c, X, fv: K.F([c.a, c.g, c.h], [c.b, c.g, c.h], X.x),
    rhs=_cancel_rhs,
    args=ARGS_X_ALL,
    domain_text="x in k",
)


def _geom_rhs(K, c, X, fv):
    one_m_x = _one_minus(K, X.x)
    nontriv = K.chi(-c.u, one_m_x)
    triv = K.ints(1 - K.q * K.kron(one_m_x))
    return where(np.mod(c.u, K.m) != 0, nontriv, triv)


_register(
    id="BASE-06",
    anchor="closed form of 1F0(mu; x) on nonzero x",
    slots=("u",),
    lhs=lambda K, c, X, fv: K.F10(c.u, X.x),
    rhs=_geom_rhs,
    args=ARGS_X_NZ,
    domain_text="x != 0",
)

_EULER_C = lambda m, c: pair(m, [c.a, c.b], [0, c.c]) == 0  # noqa: E731

_register(
    id="BASE-07",
    anchor="Euler transformation of 2F1",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.F21(c.a, c.b, c.c, X.x),
    rhs=lambda K, c, X, fv: K.chi(c.c - c.a - c.b, _one_minus(K, X.x)) * K.F21(c.c - c.a, c.c - c.b, c.c, X.x),
    constraint=_EULER_C,
    constraint_text="(a+b, e+c) = 0",
    args=ARGS_X_NE1,
    domain_text="x != 1",
)

_register(
    id="BASE-08",
    anchor="Pfaff transformation of 2F1",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.F21(c.a, c.b, c.c, X.x),
    rhs=lambda K, c, X, fv: K.chi(-c.a, _one_minus(K, X.x)) * K.F21(c.a, c.c - c.b, c.c, _pfaff_arg(K, X.x)),
    constraint=_EULER_C,
    constraint_text="(a+b, e+c) = 0",
    args=ARGS_X_NE1,
    domain_text="x != 1",
)

_register(
    id="BASE-09",
    anchor="Euler-Gauss summation formula for 2F1 at 1",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.F21(c.a, c.b, c.c, 1),
    rhs=lambda K, c, X, fv: K.gc(c.c) * K.g(c.c - c.a - c.b) * K.igc(c.c - c.a) * K.igc(c.c - c.b),
    constraint=lambda m, c: ~_msets_equal(m, [c.a, c.b], [c.c, np.zeros_like(c.c)]),
    constraint_text="a+b != c+e as multisets",
)

_register(
    id="BASE-10",
    anchor="Vandermonde-type evaluation of 2F1(a, nu-bar; c; 1)",
    slots=("a", "c", "n"),
    lhs=lambda K, c, X, fv: K.F21(c.a, -c.n, c.c, 1),
    rhs=lambda K, c, X, fv: K.p(c.c - c.a, c.n) * K.ipc(c.c, c.n),
    constraint=lambda m, c: pair(m, [c.a], [0, c.c]) == 0,
    constraint_text="(a, e+c) = 0",
)


def _kummer_rhs(K, c, X, fv):
    A2 = 2 * c.a
    out = None
    for ap in (c.a, c.a + _PH(K)):
        t = K.gc(A2 - c.b) * K.g(ap) * K.ig(A2) * K.igc(ap - c.b)
        out = t if out is None else out + t
    return out


_register(
    id="BASE-11",
    anchor="Kummer summation formula at -1",
    slots=("a", "b"),
    lhs=lambda K, c, X, fv: K.F21(2 * c.a, c.b, 2 * c.a - c.b, _neg1(K)),
    rhs=_kummer_rhs,
    needs_odd_q=True,
)

_register(
    id="BASE-12",
    anchor="Gauss second summation formula at 1/2",
    slots=("a", "b"),
    lhs=lambda K, c, X, fv: K.F21(2 * c.a, 2 * c.b, c.a + c.b, _half(K)),
    rhs=lambda K, c, X, fv: _chisum(
        K, lambda x: K.gc(c.a + c.b) * K.g(_PH(K)) * K.ig(_PH(K) + x + c.a) * K.ig(x + c.b)
    ),
    constraint=lambda m, c: pair(m, [2 * c.a, 2 * c.b, c.a - c.b], [0]) == 0,
    constraint_text="(a^2 + b^2 + a b-bar, e) = 0",
    needs_odd_q=True,
)

_register(
    id="BASE-13",
    anchor="Bailey summation formula at 1/2",
    slots=("a", "c"),
    lhs=lambda K, c, X, fv: K.F21(2 * c.a, -2 * c.a, 2 * c.c, _half(K)),
    rhs=lambda K, c, X, fv: _chisum(
        K, lambda x: K.gc(c.c) * K.gc(_PH(K) + c.c) * K.ig(_PH(K) + x + c.a + c.c) * K.ig(x - c.a + c.c)
    ),
    constraint=lambda m, c: pair(m, [2 * c.a, 2 * c.a + 2 * c.c, 2 * c.a - 2 * c.c], [0]) == 0,
    constraint_text="(a^2 + a^2 c^2 + a^2 c-bar^2, e) = 0",
    needs_odd_q=True,
)


def _saal_rhs(K, c, X, fv):
    psi = c.a + c.b + c.c - c.d
    t1 = K.gc(c.d) * K.g(c.a - psi) * K.g(c.b - psi) * K.g(c.c - psi)
    t1 = t1 * K.ig(-psi) * K.igc(c.d - c.a) * K.igc(c.d - c.b) * K.igc(c.d - c.c)
    t2 = K.gc(c.d) * K.gc(psi) * K.ig(c.a) * K.ig(c.b) * K.ig(c.c)
    return t1 + t2


_register(
    id="BASE-14",
    anchor="Saalschutz summation formula for balanced 3F2 at 1",
    slots=("a", "b", "c", "d"),
    lhs=lambda K, c, X, fv: K.F32(c.a, c.b, c.c, c.d, c.a + c.b + c.c - c.d, 1),
    rhs=_saal_rhs,
    constraint=lambda m, c: ~_msets_equal(
        m, [c.a, c.b, c.c], [np.zeros_like(c.a), c.d, c.a + c.b + c.c - c.d]
    ),
    constraint_text="with psi = a b c / d: a+b+c != e+d+psi as multisets",
)

_register(
    id="BASE-15",
    anchor="duplication formula for Gauss sums",
    slots=("a",),
    lhs=lambda K, c, X, fv: K.g(2 * c.a),
    rhs=lambda K, c, X, fv: K.chi(c.a, _el(K, 4)) * K.g(c.a) * K.g(c.a + _PH(K)) * K.ig(_PH(K)),
    needs_odd_q=True,
)


# ========================================================================================
# two-variable transformations
# ========================================================================================


def _axes2(K):
    return K.axis(0, 2), K.axis(1, 2)


def _c_first(m, c):
    return (pair(m, [c.a, c.a + c.c], [c.b]) == 0) & (pair(m, [c.c], [0]) == 0)


def _c_third(m, c):
    return pair(m, [c.a, c.c, c.c - c.a], [0]) == 0


def _c_fourth(m, c):
    return (pair(m, [c.a, c.c], [0]) == 0) & (pair(m, [c.a], [c.c]) == 0)


def _c_fifth(m, c):
    return (pair(m, [c.a], [c.b, c.c]) == 0) & (pair(m, [c.b], [c.c]) == 0)


def _lhs_first(K, c, X, fv):
    nu, mu = _axes2(K)
    t = K.fval(fv, mu) * K.p(c.a, nu + mu) * K.p(c.c, nu) * K.p(c.b - c.c, mu)
    t = t * K.ipc(c.b, nu + mu) * K.ipc(0, nu) * K.ipc(0, mu)
    return (t * K.chi(nu, X.x) * K.chi(mu, X.y)).sum((0, 1))


def _rhs_thm1(K, c, X, fv):
    F = K.fld
    e, mu = _axes2(K)
    outer = K.P([c.a, c.b - c.c], e) * K.IPC([c.b, 0], e) * K.chi(e, _pfaff_arg(K, X.x))
    inner = K.fval(fv, mu) * K.p(-e, mu) * K.ipc(0, mu) * K.chi(mu, F.div(X.y, X.x))
    main = K.chi(-c.a, _one_minus(K, X.x)) * (outer * inner).sum((0, 1))
    corr = K.fval(fv, c.c - c.b) * K.chi(-c.c, X.x) * K.chi(c.c - c.b, X.y) * K.pc(0, c.b) * K.ipc(-c.a, c.b)
    return main + corr * _sq1q(K)


_FIRST_TEXT = "(a + a c, b) = (c, e) = 0"

_register(
    id="THM-1",
    anchor="first transformation of the weighted double sum (Pfaff type)",
    slots=("a", "b", "c"),
    lhs=_lhs_first,
    rhs=_rhs_thm1,
    constraint=_c_first,
    constraint_text=_FIRST_TEXT,
    args=ARGS_THM,
    domain_text="x not in {0,1}, y in k",
    needs_f=True,
)


def _rhs_lem1(K, c, X, fv):
    F = K.fld
    x = X.x
    main = K.chi(-c.a - c.u, _one_minus(K, x)) * K.F21(c.a + c.u, c.b - c.c + c.u, c.b + c.u, _pfaff_arg(K, x))
    corr = K.ints(K.delta(c.u + c.b - c.c)) * K.g(c.a - c.b) * K.ig(c.a + c.c - c.b) * K.ig(-c.c) * K.chi(-c.c, x)
    return main + corr * (1 - K.q)


_register(
    id="LEM-1",
    anchor="Pfaff transformation of 2F1(a mu, c; b mu; x) with boundary term",
    slots=("a", "b", "c", "u"),
    lhs=lambda K, c, X, fv: K.F21(c.a + c.u, c.c, c.b + c.u, X.x),
    rhs=_rhs_lem1,
    constraint=_c_first,
    constraint_text=_FIRST_TEXT,
    args=ARGS_X_NE1,
    domain_text="x != 1",
)


def _rhs_cor1a(K, c, X, fv):
    F = K.fld
    x, y = X.x, X.y
    z = F.div(F.sub(x, y), F.sub(x, 1))
    pre = K.chi(-c.a, _one_minus(K, x))
    t1 = pre * K.F21(c.a, c.b - c.c, c.b, z)
    t2 = pre * K.ints(K.kron(F.sub(x, y)))
    t3 = K.pc(0, c.b) * K.ipc(-c.a, c.b) * K.chi(-c.c, x) * K.chi(c.c - c.b, y)
    return t1 + t2 + t3


_register(
    id="COR-1a",
    anchor="reduction of F^{1:1:1}_{1:0:0} to a 2F1 in (x-y)/(x-1)",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf([c.a], [c.b], [c.c], [], [c.b - c.c], [], X.x, X.y),
    rhs=_rhs_cor1a,
    constraint=_c_first,
    constraint_text=_FIRST_TEXT,
    args=ARGS_X_NOT01_Y_NZ,
    domain_text="x not in {0,1}, y != 0",
)


def _rhs_cor1b(K, c, X, fv):
    x = X.x
    t1 = K.chi(-c.a, _one_minus(K, x)) * K.F32(c.a, c.b - c.c, c.r - c.d, c.b, c.r, _pfaff_arg(K, x))
    t2 = K.p(c.d, c.c - c.b) * K.pc(0, c.b) * K.ipc(c.r, c.c - c.b) * K.ipc(-c.a, c.b) * K.chi(-c.b, x)
    return t1 + t2


_register(
    id="COR-1b",
    anchor="reduction of F^{1:1:2}_{1:0:1} on the diagonal to a 3F2",
    slots=("a", "b", "c", "d", "r"),
    lhs=lambda K, c, X, fv: K.kdf([c.a], [c.b], [c.c], [], [c.b - c.c, c.d], [c.r], X.x, X.x),
    rhs=_rhs_cor1b,
    constraint=lambda m, c: _c_first(m, c) & (pair(m, [c.d], [0, c.r]) == 0),
    constraint_text=_FIRST_TEXT + ", (d, e+r) = 0",
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = x",
)


def _rhs_thm2(K, c, X, fv):
    F = K.fld
    x, y = X.x, X.y
    e, mu = _axes2(K)
    euler = K.chi(c.b - c.a - c.c, _one_minus(K, x))
    outer = K.P([c.b - c.a, c.b - c.c], e) * K.IPC([c.b, 0], e) * K.chi(e, x)
    inner = K.fval(fv, mu) * K.P([c.a, -e], mu) * K.IPC([c.a - c.b - e, 0], mu) * K.chi(mu, F.div(y, x))
    main = euler * (outer * inner).sum((0, 1))
    c1 = K.fval(fv, -c.a) * K.chi(c.a - c.b, F.neg(x)) * K.chi(-c.a, F.neg(y)) * euler
    c1 = c1 * K.pc(0, c.b) * K.ip(-c.c, c.b)
    c2 = K.fval(fv, c.c - c.b) * K.chi(-c.c, x) * K.chi(c.c - c.b, y) * K.pc(0, c.b) * K.ipc(-c.a, c.b)
    return main + (c2 - c1) * _sq1q(K)


_register(
    id="THM-2",
    anchor="second transformation of the weighted double sum (Euler type)",
    slots=("a", "b", "c"),
    lhs=_lhs_first,
    rhs=_rhs_thm2,
    constraint=_c_first,
    constraint_text=_FIRST_TEXT,
    args=ARGS_THM,
    domain_text="x not in {0,1}, y in k",
    needs_f=True,
)


def _rhs_lem2(K, c, X, fv):
    F = K.fld
    x = X.x
    euler = K.chi(c.b - c.a - c.c, _one_minus(K, x))
    main = euler * K.F21(c.b - c.a, c.b - c.c + c.u, c.b + c.u, x)
    c1 = K.ints(K.delta(c.a + c.u)) * K.p(c.a - c.b, c.c) * K.ipc(0, c.c) * K.chi(c.a - c.b, F.neg(x)) * euler
    c2 = K.ints(K.delta(c.b - c.c + c.u)) * K.pc(0, c.c) * K.ip(c.a - c.b, c.c) * K.chi(-c.c, F.neg(x))
    return main + c1 * Fraction(K.q - 1, K.q) + c2 * (1 - K.q)


_register(
    id="LEM-2",
    anchor="Euler transformation of 2F1(a mu, c; b mu; x) with boundary terms",
    slots=("a", "b", "c", "u"),
    lhs=lambda K, c, X, fv: K.F21(c.a + c.u, c.c, c.b + c.u, X.x),
    rhs=_rhs_lem2,
    constraint=_c_first,
    constraint_text=_FIRST_TEXT,
    args=ARGS_X_NE1,
    domain_text="x != 1",
)


def _rhs_cor2a(K, c, X, fv):
    x = X.x
    return K.chi(-c.a, _one_minus(K, x)) + K.chi(-c.b, x) * K.pc(0, c.b) * K.ipc(-c.a, c.b)


_c_cor2a = lambda m, c: (pair(m, [c.a, c.a + c.c], [c.b]) == 0) & (pair(m, [c.b, c.c], [0]) == 0)  # noqa: E731

_register(
    id="COR-2a",
    anchor="closed form of F^{1:1:1}_{1:0:0} on the diagonal",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf([c.a], [c.b], [c.c], [], [c.b - c.c], [], X.x, X.x),
    rhs=_rhs_cor2a,
    constraint=_c_cor2a,
    constraint_text="(a + a c, b) = (b + c, e) = 0",
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = x",
)


def _rhs_cor2b(K, c, X, fv):
    F = K.fld
    x = X.x
    t1 = K.chi(c.b - c.a - c.c, _one_minus(K, x)) * K.F21(c.b - c.c, c.b + c.d - c.a, c.b + c.d, x)
    common = K.chi(-c.b, F.neg(x)) * K.pc(c.d, c.b) * K.pc(0, c.b) * K.ipc(-c.a, c.b)
    t2 = common * K.chi(c.b - c.a, _one_minus(K, x)) * K.ip(-c.c, c.b)
    t3 = common * K.qpow(-K.delta(c.d + c.c - c.b)) * K.ip(-c.d - c.c, c.b)
    return t1 + t2 + t3


_register(
    id="COR-2b",
    anchor="reduction of F^{1:1:2}_{1:0:1} on the diagonal to a 2F1",
    slots=("a", "b", "c", "d"),
    lhs=lambda K, c, X, fv: K.kdf([c.a], [c.b], [c.c], [], [c.b - c.c, c.d], [c.b + c.d], X.x, X.x),
    rhs=_rhs_cor2b,
    constraint=lambda m, c: _c_cor2a(m, c) & (pair(m, [c.a, c.d], [0, c.a - c.b]) == 0),
    constraint_text="(a + a c, b) = (b + c, e) = (a + d, e + a b-bar) = 0",
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = x",
)


def _rhs_cor2c(K, c, X, fv):
    x = X.x
    A, B = 2 * c.a, 2 * c.b
    t1 = K.chi(B - A - c.c, _one_minus(K, x)) * K.F21(B - c.c, c.b - c.a, c.a + c.b, x)
    t2 = K.chi(-B, x) * K.chi(B - A, _one_minus(K, x)) * K.pc(c.a - c.b, B) * K.pc(0, B)
    t2 = t2 * K.ip(-A, B) * K.ip(-c.c, B)
    t3 = K.chi(-B, x) * K.p(-c.a - c.b, B) * K.pc(0, B) * K.ipc(c.b - c.a - c.c, B) * K.ipc(-A, B)
    return t1 + t2 + t3


_register(
    id="COR-2c",
    anchor="reduction of F^{1:1:2}_{1:0:1} with squared parameters on the diagonal",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf(
        [2 * c.a], [2 * c.b], [c.c], [], [2 * c.b - c.c, c.a - c.b], [c.a + c.b], X.x, X.x
    ),
    rhs=_rhs_cor2c,
    constraint=lambda m, c: (pair(m, [2 * c.a, 2 * c.a + c.c], [2 * c.b]) == 0)
    & (pair(m, [2 * c.a, 2 * c.b, c.c], [0]) == 0),
    constraint_text="(a^2 + a^2 c, b^2) = (a^2 + b^2 + c, e) = 0",
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = x",
)


def _rhs_cor2c_d(K, c, X, fv):
    # COR-2b at (a^2, b^2, c, phi = a b-bar); differs from the entry above when a c = b
    x = X.x
    A, B = 2 * c.a, 2 * c.b
    t1 = K.chi(B - A - c.c, _one_minus(K, x)) * K.F21(B - c.c, c.b - c.a, c.a + c.b, x)
    common = K.chi(-B, x) * K.pc(c.a - c.b, B) * K.pc(0, B)
    t2 = common * K.chi(B - A, _one_minus(K, x)) * K.ip(-A, B) * K.ip(-c.c, B)
    t3 = common * K.qpow(-K.delta(c.a + c.c - 3 * c.b)) * K.ipc(-A, B) * K.ip(c.b - c.a - c.c, B)
    return t1 + t2 + t3


_register(
    id="COR-2c-D",
    anchor="COR-2c with its last term rederived from COR-2b at phi = a b-bar",
    slots=("a", "b", "c"),
    lhs=_REGISTRY["COR-2c"].lhs,
    rhs=_rhs_cor2c_d,
    constraint=_REGISTRY["COR-2c"].constraint,
    constraint_text=_REGISTRY["COR-2c"].constraint_text,
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = x",
    restates="COR-2c",
)


def _rhs_sum2a(K, c, X, fv):
    PH = _PH(K)
    A, B, C = 2 * c.a, 2 * c.b, 2 * c.c
    four = _el(K, 4)
    s = _chisum(K, lambda x: K.gc(PH + c.a + c.b - c.c) * K.g(c.b - c.c + x) * K.ig(B - C) * K.ig(PH + c.a + x))
    t1 = K.chi(c.b - c.a - c.c, four) * s
    base = K.pc(PH + c.a - c.b - c.c, B) * K.pc(0, B) * K.ipc(-A, B)
    t2 = K.chi(c.b - c.a, four) * base * K.ip(-C, B)
    t3 = K.qpow(-K.delta(PH + c.a - 3 * c.b + c.c)) * base * K.ip(PH - c.a + c.b - c.c, B)
    return t1 + t2 + t3


_register(
    id="SUM-2a",
    anchor="evaluation of F^{1:1:2}_{1:0:1} at (-1,-1) via Kummer",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf(
        [2 * c.a], [2 * c.b], [2 * c.c], [],
        [2 * c.b - 2 * c.c, _PH(K) + c.a - c.b - c.c], [_PH(K) + c.a + c.b - c.c],
        _neg1(K), _neg1(K),
    ),
    rhs=_rhs_sum2a,
    constraint=lambda m, c: (pair(m, [2 * c.a, 2 * c.a + 2 * c.c], [2 * c.b]) == 0)
    & (pair(m, [2 * c.a, 2 * c.b, 2 * c.c, m // 2 + c.a - c.b - c.c], [0]) == 0),
    constraint_text="(a^2 + a^2 c^2, b^2) = (a^2 + b^2 + c^2 + ph a b-bar c-bar, e) = 0",
    needs_odd_q=True,
)


def _rhs_sum2b(K, c, X, fv):
    PH = _PH(K)
    B, C = 2 * c.b, 2 * c.c
    two, four = _el(K, 2), _el(K, 4)
    s = _chisum(K, lambda x: K.gc(B - c.a - C) * K.g(PH) * K.ig(PH + c.b - c.c + x) * K.ig(c.b - c.a - c.c + x))
    t1 = K.chi(c.a - B + C, two) * s
    base = K.pc(-c.a - C, B) * K.pc(0, B) * K.ipc(-c.a, B)
    t2 = K.chi(c.a, two) * base * K.ip(-C, B)
    t3 = K.chi(c.b, four) * K.qpow(-K.delta(c.a + B)) * base * K.ip(c.a, B)
    return t1 + t2 + t3


_register(
    id="SUM-2b",
    anchor="evaluation of F^{1:1:2}_{1:0:1} at (1/2,1/2) via Gauss second",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf(
        [c.a], [2 * c.b], [2 * c.c], [], [2 * c.b - 2 * c.c, -c.a - 2 * c.c], [2 * c.b - c.a - 2 * c.c],
        _half(K), _half(K),
    ),
    rhs=_rhs_sum2b,
    constraint=lambda m, c: (pair(m, [c.a, c.a + 2 * c.c], [2 * c.b]) == 0)
    & (pair(m, [c.a, 2 * c.b, 2 * c.c, 2 * c.b - 2 * c.c], [0]) == 0)
    & (pair(m, [-c.a - 2 * c.c], [0, c.a - 2 * c.b]) == 0),
    constraint_text="(a + a c^2, b^2) = (a + b^2 + c^2 + b^2 c-bar^2, e) = (a-bar c-bar^2, e + a b-bar^2) = 0",
    needs_odd_q=True,
)


def _rhs_sum2c(K, c, X, fv):
    PH = _PH(K)
    A, B, C = 2 * c.a, 2 * c.b, 2 * c.c
    four = _el(K, 4)
    s = _chisum(
        K, lambda x: K.gc(c.a + c.c - c.b) * K.gc(PH + c.a + c.c - c.b) * K.ig(PH + c.a + x) * K.ig(c.a + C - B + x)
    )
    t1 = K.chi(c.a - c.b + c.c, four) * s
    base = K.pc(A + C - 4 * c.b, B) * K.pc(0, B) * K.ipc(-A, B)
    t2 = K.chi(c.a, four) * base * K.ip(-C, B)
    t3 = K.chi(c.b, four) * K.qpow(-K.delta(A + 4 * c.c - 6 * c.b)) * base * K.ip(-A - 4 * c.c + 4 * c.b, B)
    return t1 + t2 + t3


_register(
    id="SUM-2c",
    anchor="evaluation of F^{1:1:2}_{1:0:1} at (1/2,1/2) via Bailey",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf(
        [2 * c.a], [2 * c.b], [2 * c.c], [],
        [2 * c.b - 2 * c.c, 2 * c.a + 2 * c.c - 4 * c.b], [2 * c.a + 2 * c.c - 2 * c.b],
        _half(K), _half(K),
    ),
    rhs=_rhs_sum2c,
    constraint=lambda m, c: (pair(m, [2 * c.a, 2 * c.a + 2 * c.c], [2 * c.b]) == 0)
    & (
        pair(
            m,
            [2 * c.a, 2 * c.b, 2 * c.c, 2 * c.b - 2 * c.c, 2 * c.a + 2 * c.c - 4 * c.b, 2 * c.a + 4 * c.c - 4 * c.b],
            [0],
        )
        == 0
    ),
    constraint_text="(a^2 + a^2 c^2, b^2) = (a^2 + b^2 + c^2 + b^2 c-bar^2 + a^2 c^2 b-bar^4 + a^2 c^4 b-bar^4, e) = 0",
    needs_odd_q=True,
)


# -- third family: F^{0:2:C}_{1:0:C'} with (a + c)_nu ------------------------------------


def _lhs_third(K, c, X, fv):
    nu, mu = _axes2(K)
    t = K.fval(fv, mu) * K.P([c.a, c.c], nu) * K.P([c.b - c.a, c.b - c.c], mu)
    t = t * K.ipc(c.b, nu + mu) * K.ipc(0, nu) * K.ipc(0, mu)
    return (t * K.chi(nu, X.x) * K.chi(mu, X.y)).sum((0, 1))


def _rhs_thm3(K, c, X, fv):
    F = K.fld
    x, y = X.x, X.y
    e, mu = _axes2(K)
    outer = K.P([c.b - c.a, c.b - c.c], e) * K.IPC([c.b, 0], e) * K.chi(e, x)
    w = F.div(F.mul(y, F.sub(x, 1)), x)
    inner = K.fval(fv, mu) * K.p(-e, mu) * K.ipc(0, mu) * K.chi(mu, w)
    main = K.chi(c.b - c.a - c.c, _one_minus(K, x)) * (outer * inner).sum((0, 1))
    myx = F.neg(F.div(y, x))
    c1 = K.fval(fv, c.a - c.b) * K.pc(0, c.b) * K.ip(-c.c, c.b) * K.chi(c.a, myx)
    c2 = K.fval(fv, c.c - c.b) * K.pc(0, c.b) * K.ip(-c.a, c.b) * K.chi(c.c, myx)
    return main + K.chi(-c.b, F.neg(y)) * (c1 + c2) * _sq1q(K)


_THIRD_TEXT = "(a + c + a-bar c, e) = 0"

_register(
    id="THM-3",
    anchor="third transformation of the weighted double sum",
    slots=("a", "b", "c"),
    lhs=_lhs_third,
    rhs=_rhs_thm3,
    constraint=_c_third,
    constraint_text=_THIRD_TEXT,
    args=ARGS_THM,
    domain_text="x not in {0,1}, y in k",
    needs_f=True,
)


def _rhs_lem3(K, c, X, fv):
    x = X.x
    bu = c.b + c.u
    main = K.chi(bu - c.a - c.c, _one_minus(K, x)) * K.F21(bu - c.a, bu - c.c, bu, x)
    c1 = K.ints(K.delta(bu - c.a)) * K.g(c.c - c.a) * K.ig(c.c) * K.ig(-c.a) * K.chi(-c.a, x)
    c2 = K.ints(K.delta(bu - c.c)) * K.g(c.a - c.c) * K.ig(c.a) * K.ig(-c.c) * K.chi(-c.c, x)
    return main + (c1 + c2) * (1 - K.q)


_register(
    id="LEM-3",
    anchor="Euler transformation of 2F1(a, c; b mu; x) with boundary terms",
    slots=("a", "b", "c", "u"),
    lhs=lambda K, c, X, fv: K.F21(c.a, c.c, c.b + c.u, X.x),
    rhs=_rhs_lem3,
    constraint=_c_third,
    constraint_text=_THIRD_TEXT,
    args=ARGS_X_NE1,
    domain_text="x != 1",
)


def _rhs_cor3a(K, c, X, fv):
    F = K.fld
    x, y = X.x, X.y
    z = F.sub(F.add(x, y), F.mul(x, y))
    pre = K.chi(c.b - c.a - c.c, _one_minus(K, x))
    t1 = pre * K.F21(c.b - c.a, c.b - c.c, c.b, z)
    t2 = pre * K.ints(K.kron(z))
    myx = F.neg(F.div(y, x))
    t3 = K.pc(0, c.b) * K.ip(-c.c, c.b) * K.chi(c.a, myx) + K.pc(0, c.b) * K.ip(-c.a, c.b) * K.chi(c.c, myx)
    return t1 + t2 + K.chi(-c.b, F.neg(y)) * t3


_register(
    id="COR-3a",
    anchor="reduction of F^{0:2:2}_{1:0:0} to a 2F1 in x + y - xy",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf([], [c.b], [c.a, c.c], [], [c.b - c.a, c.b - c.c], [], X.x, X.y),
    rhs=_rhs_cor3a,
    constraint=_c_third,
    constraint_text=_THIRD_TEXT,
    args=ARGS_X_NOT01_Y_NZ,
    domain_text="x not in {0,1}, y != 0",
)


def _rhs_cor3b(K, c, X, fv):
    F = K.fld
    x = X.x
    omx = _one_minus(K, x)
    t1 = K.chi(c.b - c.a - c.c, omx) * K.F32(c.b - c.a, c.b - c.c, c.r - c.d, c.b, c.r, x)
    u1 = K.p(c.d, c.a - c.b) * K.pc(0, c.b) * K.ipc(c.r, c.a - c.b) * K.ip(-c.c, c.b) * K.chi(-c.a, omx)
    u2 = K.p(c.d, c.c - c.b) * K.pc(0, c.b) * K.ipc(c.r, c.c - c.b) * K.ip(-c.a, c.b) * K.chi(-c.c, omx)
    return t1 + K.chi(-c.b, F.div(x, omx)) * (u1 + u2)


_register(
    id="COR-3b",
    anchor="reduction of F^{0:2:3}_{1:0:1} at (x, x/(x-1)) to a 3F2",
    slots=("a", "b", "c", "d", "r"),
    lhs=lambda K, c, X, fv: K.kdf(
        [], [c.b], [c.a, c.c], [], [c.b - c.a, c.b - c.c, c.d], [c.r], X.x, _pfaff_arg(K, X.x)
    ),
    rhs=_rhs_cor3b,
    constraint=lambda m, c: _c_third(m, c) & (pair(m, [c.d], [0, c.r]) == 0),
    constraint_text=_THIRD_TEXT + ", (d, e+r) = 0",
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = x/(x-1)",
)


# -- fourth family: (a)_nu (c)_nu (b c-bar)_mu ---------------------------------------------


def _lhs_fourth(K, c, X, fv):
    nu, mu = _axes2(K)
    t = K.fval(fv, mu) * K.P([c.a, c.c], nu) * K.p(c.b - c.c, mu)
    t = t * K.ipc(c.b, nu + mu) * K.ipc(0, nu) * K.ipc(0, mu)
    return (t * K.chi(nu, X.x) * K.chi(mu, X.y)).sum((0, 1))


def _rhs_thm4(K, c, X, fv):
    F = K.fld
    x, y = X.x, X.y
    e, mu = _axes2(K)
    outer = K.P([c.a, c.b - c.c], e) * K.IPC([c.b, 0], e) * K.chi(e, _pfaff_arg(K, x))
    w = F.div(F.mul(y, F.sub(x, 1)), x)
    inner = K.fval(fv, mu) * K.p(-e, mu) * K.IPC([-c.a - e, 0], mu) * K.chi(mu, w)
    main = K.chi(-c.a, _one_minus(K, x)) * (outer * inner).sum((0, 1))
    corr = K.fval(fv, c.c - c.b) * K.pc(0, c.b) * K.p(c.a, -c.c) * K.chi(-c.b, F.neg(y)) * K.chi(c.c, F.div(y, x))
    return main + corr * _sq1q(K)


_FOURTH_TEXT = "(a + c, e) = (a, c) = 0"

_register(
    id="THM-4",
    anchor="fourth transformation of the weighted double sum",
    slots=("a", "b", "c"),
    lhs=_lhs_fourth,
    rhs=_rhs_thm4,
    constraint=_c_fourth,
    constraint_text=_FOURTH_TEXT,
    args=ARGS_THM,
    domain_text="x not in {0,1}, y in k",
    needs_f=True,
)


def _rhs_lem4(K, c, X, fv):
    x = X.x
    main = K.chi(-c.a, _one_minus(K, x)) * K.F21(c.a, c.b - c.c + c.u, c.b + c.u, _pfaff_arg(K, x))
    corr = K.ints(K.delta(c.u + c.b - c.c)) * K.g(c.a - c.c) * K.ig(c.a) * K.ig(-c.c) * K.chi(-c.c, x)
    return main + corr * (1 - K.q)


_register(
    id="LEM-4",
    anchor="Pfaff transformation of 2F1(a, c; b mu; x) with boundary term",
    slots=("a", "b", "c", "u"),
    lhs=lambda K, c, X, fv: K.F21(c.a, c.c, c.b + c.u, X.x),
    rhs=_rhs_lem4,
    constraint=_c_fourth,
    constraint_text=_FOURTH_TEXT,
    args=ARGS_X_NE1,
    domain_text="x != 1",
)


def _y4(K, x):
    return _pfaff_arg(K, x)


def _rhs_cor4a(K, c, X, fv):
    F = K.fld
    x = X.x
    t1 = K.chi(-c.a, _one_minus(K, x)) * K.F21(c.b - c.c, c.a + c.s, c.b, _pfaff_arg(K, x))
    t2 = K.p(c.s, c.c - c.b) * K.pc(0, c.b) * K.p(c.a, -c.c)
    t2 = t2 * K.chi(-c.b, F.div(x, _one_minus(K, x))) * K.chi(-c.c, F.sub(x, 1))
    return t1 + t2


_register(
    id="COR-4a",
    anchor="reduction of F^{0:2:2}_{1:0:0} at (x, x/(x-1)) to a 2F1",
    slots=("a", "b", "c", "s"),
    lhs=lambda K, c, X, fv: K.kdf([], [c.b], [c.a, c.c], [], [c.b - c.c, c.s], [], X.x, _y4(K, X.x)),
    rhs=_rhs_cor4a,
    constraint=lambda m, c: (pair(m, [c.a, c.c], [0]) == 0) & (pair(m, [c.a], [c.c, -c.s]) == 0),
    constraint_text="(a + c, e) = (a, c + s-bar) = 0",
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = x/(x-1)",
)


def _rhs_cor4b(K, c, X, fv):
    F = K.fld
    x = X.x
    omx = _one_minus(K, x)
    ast = c.a + c.s + c.t
    f32 = K.F32(c.b - c.c, c.a + c.s, c.a + c.t, c.b, ast, _pfaff_arg(K, x))
    g = K.gc(ast) * K.g(-c.c) * K.gc(c.b) * K.ig(c.a) * K.ig(c.s) * K.ig(c.t) * K.ig(c.b - c.c)
    g = g * K.chi(c.a, _neg1(K)) * K.chi(c.b, F.div(F.sub(x, 1), x)) * K.chi(-c.c, omx)
    t1 = K.chi(-c.a, omx) * (f32 + g)
    t2 = K.p(c.s, c.c - c.b) * K.p(c.t, c.c - c.b) * K.pc(0, c.b) * K.p(c.a, -c.c) * K.ipc(ast, c.c - c.b)
    t2 = t2 * K.chi(-c.b, F.div(x, omx)) * K.chi(-c.c, F.sub(x, 1))
    return t1 + t2


_register(
    id="COR-4b",
    anchor="reduction of F^{0:2:3}_{1:0:1} at (x, x/(x-1)) to a 3F2",
    slots=("a", "b", "c", "s", "t"),
    lhs=lambda K, c, X, fv: K.kdf(
        [], [c.b], [c.a, c.c], [], [c.b - c.c, c.s, c.t], [c.a + c.s + c.t], X.x, _y4(K, X.x)
    ),
    rhs=_rhs_cor4b,
    constraint=lambda m, c: (pair(m, [c.a, c.c, c.s], [0]) == 0)
    & (pair(m, [c.a], [c.c, -c.s]) == 0)
    & (pair(m, [c.t], [0, -c.a]) == 0),
    constraint_text="(a + c + s, e) = (a, c + s-bar) = (t, e + a-bar) = 0",
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = x/(x-1)",
)


def _rhs_cor4c(K, c, X, fv):
    F = K.fld
    x = X.x
    omx = _one_minus(K, x)
    A = 2 * c.a
    t1 = K.chi(-A, omx) * K.F32(c.b - c.c, A + c.s, c.a, c.b, c.a + c.s, _pfaff_arg(K, x))
    t2 = K.chi(c.b - A - c.c, omx) * K.chi(-c.b, F.neg(x)) * K.qpow(K.delta(c.a + c.s))
    t2 = t2 * K.p(c.s, c.a) * K.pc(0, c.b) * K.ip(-A, c.a) * K.ip(-c.c, c.b)
    t3 = K.chi(-c.b, x) * K.chi(c.b - c.c, omx) * K.p(c.s, c.c - c.b) * K.p(-c.a, c.c - c.b) * K.pc(0, c.b)
    t3 = t3 * K.ipc(c.a + c.s, c.c - c.b) * K.ipc(-A, c.c)
    return t1 + t2 + t3


_register(
    id="COR-4c",
    anchor="reduction of F^{0:2:3}_{1:0:1} with a squared parameter at (x, x/(x-1))",
    slots=("a", "b", "c", "s"),
    lhs=lambda K, c, X, fv: K.kdf(
        [], [c.b], [2 * c.a, c.c], [], [c.b - c.c, c.s, -c.a], [c.a + c.s], X.x, _y4(K, X.x)
    ),
    rhs=_rhs_cor4c,
    constraint=lambda m, c: (pair(m, [2 * c.a, c.c, c.s, 2 * c.a + c.s], [0]) == 0)
    & (pair(m, [2 * c.a], [c.c]) == 0),
    constraint_text="(a^2 + c + s + a^2 s, e) = (a^2, c) = 0",
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = x/(x-1)",
)


def _sum4_tail(K, c, num_param):
    B, C = 2 * c.b, 2 * c.c
    return K.p(num_param, C - B) * K.pc(0, B) * K.p(c.a, -C)


def _rhs_sum4a(K, c, X, fv):
    B, C = 2 * c.b, 2 * c.c
    s = _chisum(K, lambda x: K.gc(B) * K.g(c.b - c.c + x) * K.ig(B - C) * K.igc(c.b + c.c + x))
    return K.chi(c.a, _el(K, 2)) * s + K.chi(c.c, _el(K, 4)) * _sum4_tail(K, c, -c.a - C)


_register(
    id="SUM-4a",
    anchor="evaluation of F^{0:2:2}_{1:0:0} at (1/2, -1)",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf(
        [], [2 * c.b], [c.a, 2 * c.c], [], [2 * c.b - 2 * c.c, -c.a - 2 * c.c], [], _half(K), _neg1(K)
    ),
    rhs=_rhs_sum4a,
    constraint=lambda m, c: pair(m, [c.a, 2 * c.c], [0]) == 0,
    constraint_text="(a + c^2, e) = 0",
    needs_odd_q=True,
)


def _rhs_sum4b(K, c, X, fv):
    PH = _PH(K)
    B, C = 2 * c.b, 2 * c.c
    s = _chisum(K, lambda x: K.gc(B) * K.g(PH) * K.ig(PH + c.b - c.c + x) * K.ig(c.b + c.c + x))
    tail = _sum4_tail(K, c, -c.a + B + C)
    return K.chi(-c.a, _el(K, 2)) * s + K.chi(c.b - c.c, _el(K, 4)) * tail


_register(
    id="SUM-4b",
    anchor="evaluation of F^{0:2:2}_{1:0:0} at (-1, 1/2)",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf(
        [], [2 * c.b], [c.a, 2 * c.c], [], [2 * c.b - 2 * c.c, -c.a + 2 * c.b + 2 * c.c], [], _neg1(K), _half(K)
    ),
    rhs=_rhs_sum4b,
    constraint=lambda m, c: pair(m, [c.a, 2 * c.c, 2 * c.b + 2 * c.c, 2 * c.b - 2 * c.c], [0]) == 0,
    constraint_text="(a + c^2 + b^2 c^2 + b^2 c-bar^2, e) = 0",
    needs_odd_q=True,
)


def _rhs_sum4c(K, c, X, fv):
    PH = _PH(K)
    B, C = 2 * c.b, 2 * c.c
    s = _chisum(K, lambda x: K.gc(c.b) * K.gc(PH + c.b) * K.ig(B - c.c + x) * K.ig(PH + c.c + x))
    tail = _sum4_tail(K, c, -c.a - B + C)
    return K.chi(-c.a, _el(K, 2)) * s + K.chi(c.b - c.c, _el(K, 4)) * tail


_register(
    id="SUM-4c",
    anchor="evaluation of F^{0:2:2}_{1:0:0} at (-1, 1/2), second family",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf(
        [], [2 * c.b], [c.a, 2 * c.c], [], [2 * c.b - 2 * c.c, -c.a - 2 * c.b + 2 * c.c], [], _neg1(K), _half(K)
    ),
    rhs=_rhs_sum4c,
    constraint=lambda m, c: pair(m, [c.a, 2 * c.c, 2 * c.c - 2 * c.b, 4 * c.b - 2 * c.c], [0]) == 0,
    constraint_text="(a + c^2 + b-bar^2 c^2 + b^4 c-bar^2, e) = 0",
    needs_odd_q=True,
)


# -- fifth family: (a)_{nu mu} (c)_{nu mu} -------------------------------------------------


def _lhs_fifth(K, c, X, fv):
    nu, mu = _axes2(K)
    t = K.fval(fv, mu) * K.P([c.a, c.c], nu + mu) * K.ipc(c.b, nu + mu) * K.ipc(0, nu) * K.ipc(0, mu)
    return (t * K.chi(nu, X.x) * K.chi(mu, X.y)).sum((0, 1))


def _rhs_thm5(K, c, X, fv):
    F = K.fld
    x, y = X.x, X.y
    e, mu = _axes2(K)
    outer = K.P([c.a, c.b - c.c], e) * K.IPC([c.b, 0], e) * K.chi(e, _pfaff_arg(K, x))
    inner = K.fval(fv, mu) * K.P([-e, c.c], mu) * K.IPC([0, c.c - c.b - e], mu) * K.chi(mu, F.neg(F.div(y, x)))
    main = K.chi(-c.a, _one_minus(K, x)) * (outer * inner).sum((0, 1))
    corr = K.fval(fv, -c.c) * K.pc(0, c.b) * K.ipc(-c.a, c.b) * K.chi(c.c - c.b, F.neg(x))
    corr = corr * K.chi(-c.c, y) * K.chi(c.b - c.a, _one_minus(K, x))
    return main - corr * _sq1q(K)


_FIFTH_TEXT = "(a, b + c) = (b, c) = 0"

_register(
    id="THM-5",
    anchor="fifth transformation of the weighted double sum",
    slots=("a", "b", "c"),
    lhs=_lhs_fifth,
    rhs=_rhs_thm5,
    constraint=_c_fifth,
    constraint_text=_FIFTH_TEXT,
    args=ARGS_THM,
    domain_text="x not in {0,1}, y in k",
    needs_f=True,
)


def _rhs_lem5(K, c, X, fv):
    x = X.x
    main = K.chi(-c.a - c.u, _one_minus(K, x)) * K.F21(c.a + c.u, c.b - c.c, c.b + c.u, _pfaff_arg(K, x))
    corr = K.ints(K.delta(c.c + c.u)) * K.g(c.a - c.b) * K.g(c.b - c.c) * K.ig(c.a - c.c)
    corr = corr * K.chi(c.c - c.b, x) * K.chi(c.b - c.a, _one_minus(K, x))
    return main + corr * Fraction(K.q - 1, K.q)


_register(
    id="LEM-5",
    anchor="Pfaff transformation of 2F1(a mu, c mu; b mu; x) with boundary term",
    slots=("a", "b", "c", "u"),
    lhs=lambda K, c, X, fv: K.F21(c.a + c.u, c.c + c.u, c.b + c.u, X.x),
    rhs=_rhs_lem5,
    constraint=_c_fifth,
    constraint_text=_FIFTH_TEXT,
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}",
)


def _rhs_cor5a(K, c, X, fv):
    F = K.fld
    x = X.x
    t1 = K.chi(-c.a, _one_minus(K, x)) * K.F21(c.a, c.b + c.d - c.c, c.b + c.d, _pfaff_arg(K, x))
    t2 = K.PC([c.d, 0], c.b) * K.IPC([-c.a, -c.c], c.b) * K.chi(-c.b, F.neg(x))
    return t1 + t2


_register(
    id="COR-5a",
    anchor="reduction of F^{2:0:1}_{1:0:1} at (x, -x) to a 2F1",
    slots=("a", "b", "c", "d"),
    lhs=lambda K, c, X, fv: K.kdf([c.a, c.c], [c.b], [], [], [c.d], [c.b + c.d], X.x, K.fld.neg(X.x)),
    rhs=_rhs_cor5a,
    constraint=lambda m, c: (pair(m, [c.a, 0], [c.b, c.c]) == 0)
    & (pair(m, [c.b], [c.c]) == 0)
    & (pair(m, [c.d], [0, c.c - c.b]) == 0),
    constraint_text="(a + e, b + c) = (b, c) = (d, e + b-bar c) = 0",
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = -x",
)


def _rhs_cor5b(K, c, X, fv):
    x = X.x
    B, C = 2 * c.b, 2 * c.c
    t1 = K.chi(-c.a, _one_minus(K, x)) * K.F21(c.a, c.b - c.c, c.b + c.c, _pfaff_arg(K, x))
    t2 = K.chi(-B, x) * K.p(c.c - c.b, B) * K.pc(0, B) * K.ip(-C, B) * K.ipc(-c.a, B)
    return t1 + t2


_register(
    id="COR-5b",
    anchor="reduction of F^{2:0:1}_{1:0:1} with squared parameters at (x, -x)",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf(
        [c.a, 2 * c.c], [2 * c.b], [], [], [c.c - c.b], [c.c + c.b], X.x, K.fld.neg(X.x)
    ),
    rhs=_rhs_cor5b,
    constraint=lambda m, c: (pair(m, [c.a, 0], [2 * c.b, 2 * c.c]) == 0) & (pair(m, [2 * c.b], [2 * c.c]) == 0),
    constraint_text="(a + e, b^2 + c^2) = (b^2, c^2) = 0",
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = -x",
)


def _rhs_cor5b_d(K, c, X, fv):
    # COR-5a at (a, b^2, c^2, phi = b-bar c); differs from the entry above when b c = e
    x = X.x
    B, C = 2 * c.b, 2 * c.c
    t1 = K.chi(-c.a, _one_minus(K, x)) * K.F21(c.a, c.b - c.c, c.b + c.c, _pfaff_arg(K, x))
    t2 = K.chi(-B, x) * K.pc(c.c - c.b, B) * K.pc(0, B) * K.ipc(-C, B) * K.ipc(-c.a, B)
    return t1 + t2


_register(
    id="COR-5b-D",
    anchor="COR-5b with its last term rederived from COR-5a at phi = b-bar c",
    slots=("a", "b", "c"),
    lhs=_REGISTRY["COR-5b"].lhs,
    rhs=_rhs_cor5b_d,
    constraint=_REGISTRY["COR-5b"].constraint,
    constraint_text=_REGISTRY["COR-5b"].constraint_text,
    args=ARGS_X_NOT01,
    domain_text="x not in {0,1}, y = -x",
    restates="COR-5b",
)

_register(
    id="REM-5",
    anchor="F^{2:0:0}_{1:0:0}(x, y) as a 2F1 in x + y",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf([c.a, c.c], [c.b], [], [], [], [], X.x, X.y),
    rhs=lambda K, c, X, fv: K.F21(c.a, c.c, c.b, K.fld.add(X.x, X.y)) + K.ints(K.kron(K.fld.add(X.x, X.y))),
    args=ARGS_XY_NZ,
    domain_text="x != 0, y != 0",
)


def _rhs_sum5a(K, c, X, fv):
    PH = _PH(K)
    A, C = 2 * c.a, 2 * c.c
    s = _chisum(K, lambda x: K.gc(PH + c.a + c.c) * K.g(c.a + x) * K.ig(A) * K.igc(PH + c.c + x))
    tail = K.PC([PH + c.a + c.c - c.b, 0], c.b) * K.IPC([-A, -C], c.b)
    return K.chi(c.a, _el(K, 4)) * s + K.chi(c.b, K.fld.neg(_el(K, 2))) * tail


_register(
    id="SUM-5a",
    anchor="evaluation of F^{2:0:1}_{1:0:1} at (1/2, -1/2)",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf(
        [2 * c.a, 2 * c.c], [c.b], [], [], [_PH(K) + c.a + c.c - c.b], [_PH(K) + c.a + c.c],
        _half(K), K.fld.neg(_half(K)),
    ),
    rhs=_rhs_sum5a,
    constraint=lambda m, c: (pair(m, [2 * c.a], [c.b, 2 * c.c]) == 0)
    & (pair(m, [c.b], [2 * c.c, 0]) == 0)
    & (pair(m, [2 * c.c, m // 2 + c.a + c.c - c.b], [0]) == 0),
    constraint_text="(a^2, b + c^2) = (b, c^2 + e) = (c^2 + ph a b-bar c, e) = 0",
    needs_odd_q=True,
)


def _rhs_sum5b(K, c, X, fv):
    PH = _PH(K)
    A = 2 * c.a
    s = _chisum(K, lambda x: K.g(A - c.c) * K.g(PH) * K.ig(PH + c.a + x) * K.ig(c.a - c.c + x))
    tail = K.PC([A - c.b - c.c, 0], c.b) * K.IPC([-A, -c.c], c.b)
    return K.chi(-c.a, _el(K, 4)) * s + tail


_register(
    id="SUM-5b",
    anchor="evaluation of F^{2:0:1}_{1:0:1} at (-1, 1)",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf([2 * c.a, c.c], [c.b], [], [], [2 * c.a - c.b - c.c], [2 * c.a - c.c], _neg1(K), 1),
    rhs=_rhs_sum5b,
    constraint=lambda m, c: (pair(m, [2 * c.a], [c.b, c.c, 2 * c.c, c.b + c.c, 0]) == 0)
    & (pair(m, [c.b], [c.c, 0]) == 0)
    & (pair(m, [c.c], [0]) == 0),
    constraint_text="(a^2, b + c + c^2 + b c + e) = (b, c + e) = (c, e) = 0",
    needs_odd_q=True,
)


def _rhs_sum5c(K, c, X, fv):
    PH = _PH(K)
    A, C = 2 * c.a, 2 * c.c
    s = _chisum(K, lambda x: K.g(c.c - c.a) * K.g(PH + c.c - c.a) * K.ig(PH + c.c + x) * K.ig(c.c - A + x))
    tail = K.PC([C - A - c.b, 0], c.b) * K.IPC([-A, -C], c.b)
    return K.chi(-c.a, _el(K, 4)) * s + tail


_register(
    id="SUM-5c",
    anchor="evaluation of F^{2:0:1}_{1:0:1} at (-1, 1), second family",
    slots=("a", "b", "c"),
    lhs=lambda K, c, X, fv: K.kdf(
        [2 * c.a, 2 * c.c], [c.b], [], [], [2 * c.c - 2 * c.a - c.b], [2 * c.c - 2 * c.a], _neg1(K), 1
    ),
    rhs=_rhs_sum5c,
    constraint=lambda m, c: (pair(m, [2 * c.a], [c.b, 2 * c.c, 0]) == 0)
    & (pair(m, [c.b], [2 * c.c, 0]) == 0)
    & (pair(m, [2 * c.c], [2 * c.a + c.b, 4 * c.a, 0]) == 0),
    constraint_text="(a^2, b + c^2 + e) = (b, c^2 + e) = (c^2, a^2 b + a^4 + e) = 0",
    needs_odd_q=True,
)


# -- harness self-test --------------------------------------------------------------------

_register(
    id="FIX-PERTURBED",
    anchor="reflection formula with the right side deliberately perturbed at the trivial character",
    slots=("a",),
    lhs=lambda K, c, X, fv: K.g(c.a) * K.gc(-c.a),
    rhs=lambda K, c, X, fv: K.chi(c.a, _neg1(K)) * K.q + K.ints(K.delta(c.a)),
    fixture=True,
)
