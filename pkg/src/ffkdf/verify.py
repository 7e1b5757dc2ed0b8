"""Exhaustive or sampled verification of catalog identities over a field."""
from __future__ import annotations

import math
import time
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from types import SimpleNamespace
from typing import Iterator

import numpy as np

from .catalog import IdentityDef, lookup
from .cyclo import CycloValue
from .errors import InadmissibleCase, OddQRequired
from .field import FieldCtx, construct_field
from .hypergeom import Kernel
from .rings import Uncertified

DEFAULT_SEED = 0x5EED
F_VARIANTS = 3
F_NUM_RANGE = 9
F_DEN_MAX = 9
F_DEN_LCM = 2520  # lcm(1..9)
DELTA_BASIS_MAX_Q = 5
CHUNK_ELEMENTS = 4_000_000


@dataclass(frozen=True)
class Cap:
    """Limits on the number of character tuples and of argument points per tuple.

    Below ``exhaustive_limit`` total cases everything is checked regardless.
    """

    tuples: int = 500
    args: int = 50
    exhaustive_limit: int | None = None

    @property
    def limit(self) -> int:
        return self.exhaustive_limit if self.exhaustive_limit is not None else self.tuples * self.args

    @classmethod
    def parse(cls, text: str) -> "Cap":
        """``"500x50"``, ``"500"`` (tuples only) or ``"all"``."""
        text = text.strip().lower()
        if text in ("all", "none", "inf"):
            return cls(tuples=1 << 62, args=1 << 62)
        if "x" in text:
            t, a = text.split("x", 1)
            return cls(int(t), int(a))
        return cls(int(text), cls.args)


EXHAUSTIVE = Cap(tuples=1 << 62, args=1 << 62)


@dataclass
class Case:
    index: int
    chars: dict[str, int]
    args: dict[str, int]


@dataclass
class VerificationReport:
    id: str
    field: str
    attempted: int = 0
    passed: int = 0
    failed: int = 0
    exhaustive: bool = True
    counterexample: dict | None = None
    reason: str | None = None
    ms: float | None = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return asdict(self)


# -- case enumeration ---------------------------------------------------------------------


def _rng(seed: int, identity_id: str, F: FieldCtx, *extra: int) -> np.random.Generator:
    key = [seed, zlib.crc32(identity_id.encode()), zlib.crc32(str(F.spec).encode()), *extra]
    return np.random.default_rng(np.random.SeedSequence(key))


def _tuples(E: IdentityDef, F: FieldCtx) -> np.ndarray:
    k = len(E.slots)
    grid = np.indices((F.m,) * k).reshape(k, -1).T
    ns = SimpleNamespace(**{s: grid[:, i] for i, s in enumerate(E.slots)})
    return grid[E.admissible(F.m, ns)]


def _plan(E: IdentityDef, F: FieldCtx, cap: Cap, seed: int):
    """Return (tuples, per-tuple arg index arrays, args table, exhaustive?)."""
    tup = _tuples(E, F)
    args = E.args(F)
    nt, na = len(tup), len(args)
    if nt * na <= cap.limit or (nt <= cap.tuples and na <= cap.args):
        return tup, np.broadcast_to(np.arange(na), (nt, na)), args, True
    rng = _rng(seed, E.id, F)
    if nt > cap.tuples:
        keep = np.sort(rng.choice(nt, size=cap.tuples, replace=False))
        tup = tup[keep]
    if na > cap.args:
        pick = np.sort(rng.random((len(tup), na)).argsort(axis=1)[:, : cap.args], axis=1)
    else:
        pick = np.broadcast_to(np.arange(na), (len(tup), na))
    return tup, pick, args, False


def _check_field(E: IdentityDef, F: FieldCtx):
    if E.needs_odd_q and F.p == 2:
        raise OddQRequired(f"{E.id} needs a field of odd characteristic")


def admissible_cases(identity_id: str, field, cap: Cap | None = None, seed: int = DEFAULT_SEED) -> Iterator[Case]:
    """Cases that :func:`verify_identity` would check, in enumeration order."""
    E = lookup(identity_id)
    F = construct_field(field)
    _check_field(E, F)
    tup, pick, args, _ = _plan(E, F, cap or EXHAUSTIVE, seed)
    idx = 0
    for t, row in zip(tup, pick):
        for ai in row:
            yield Case(idx, dict(zip(E.slots, map(int, t))), _args_dict(E, args[ai]))
            idx += 1


def _args_dict(E: IdentityDef, row) -> dict[str, int]:
    return {name: int(v) for name, v in zip(E.arg_names, row)}


# -- weight functions ---------------------------------------------------------------------


def f_seed(seed: int, identity_id: str, F: FieldCtx, case_index: int, variant: int) -> int:
    ss = np.random.SeedSequence([seed, zlib.crc32(identity_id.encode()), F.q, case_index, variant])
    hi, lo = ss.generate_state(2, np.uint32).tolist()
    return (hi << 32) | lo


def random_weights(m: int, fseed: int) -> tuple[np.ndarray, np.ndarray]:
    """Numerators in [-9, 9] and denominators in [1, 9] for each of the m characters."""
    rng = np.random.default_rng(fseed)
    return rng.integers(-F_NUM_RANGE, F_NUM_RANGE + 1, m), rng.integers(1, F_DEN_MAX + 1, m)


def _f_variants(F: FieldCtx) -> list[tuple[str, int]]:
    out = [("seeded", v) for v in range(F_VARIANTS)]
    if F.q <= DELTA_BASIS_MAX_Q:
        out += [("delta", j) for j in range(F.m)]
    return out


def _f_descr(kind: str, val: int, seed: int, E: IdentityDef, F: FieldCtx, case_index: int) -> dict:
    if kind == "delta":
        return {"kind": "delta", "mu0": val}
    return {"kind": "seeded", "variant": val, "f_seed": f_seed(seed, E.id, F, case_index, val)}


def _weights_table(F: FieldCtx, descr: dict) -> tuple[np.ndarray, np.ndarray]:
    if descr["kind"] == "delta":
        num = np.zeros(F.m, dtype=np.int64)
        num[descr["mu0"]] = 1
        return num, np.ones(F.m, dtype=np.int64)
    return random_weights(F.m, descr["f_seed"])


# -- evaluation ---------------------------------------------------------------------------


class _Kernels:
    def __init__(self, F: FieldCtx, ring: str, twist: int):
        self.F, self.ring, self.twist = F, ring, twist
        self._cache: dict[int, Kernel] = {}

    def get(self, nprimes: int = 2) -> Kernel:
        if self.ring != "mod":
            nprimes = 2
        if nprimes not in self._cache:
            self._cache[nprimes] = Kernel(self.F, self.ring, self.twist, nprimes)
        return self._cache[nprimes]


def _as_tuple(v):
    return v if isinstance(v, tuple) else (v,)


def _evaluate(E: IdentityDef, K: Kernel, chars: np.ndarray, xy: np.ndarray, fnum, fden):
    c = SimpleNamespace(**{s: chars[:, i] for i, s in enumerate(E.slots)})
    X = SimpleNamespace(x=xy[:, 0], y=xy[:, 1])
    fv = None
    if fnum is not None:
        fv = K.rats(fnum.T, fden.T, F_DEN_LCM, float(F_NUM_RANGE))
    return _as_tuple(E.lhs(K, c, X, fv)), _as_tuple(E.rhs(K, c, X, fv))


def _equal_rows(E, kernels: _Kernels, chars, xy, fnum, fden) -> np.ndarray:
    nprimes = 2
    while True:
        K = kernels.get(nprimes)
        lhs, rhs = _evaluate(E, K, chars, xy, fnum, fden)
        try:
            ok = np.ones(len(chars), dtype=bool)
            for a, b in zip(lhs, rhs):
                ok &= np.broadcast_to(a.equals(b), ok.shape)
            return ok
        except Uncertified as exc:
            need = math.ceil(exc.bits_needed / 30.9) + 1
            if need <= nprimes:
                need = nprimes + 1
            nprimes = need


def _chunk_rows(K: Kernel) -> int:
    # sized for the widest evaluators, which carry two summation axes
    return max(1, CHUNK_ELEMENTS // (K.m * K.m * K.ring.R))


def verify_identity(
    identity_id: str,
    field,
    cap: Cap | None = None,
    seed: int = DEFAULT_SEED,
    backend: str = "mod",
    twist: int = 1,
    timing: bool = False,
) -> VerificationReport:
    """Check an identity on every (or a sample of) admissible case over ``field``.

    ``backend`` is ``"mod"`` (certified exact, default), ``"exact"`` (slow
    reference arithmetic) or ``"float"`` (complex128 with a relative tolerance).
    """
    t0 = time.perf_counter()
    E = lookup(identity_id)
    F = construct_field(field)
    rep = VerificationReport(E.id, str(F.spec))
    try:
        _check_field(E, F)
    except OddQRequired as exc:
        rep.reason = str(exc)
        return rep
    cap = cap or Cap()
    tup, pick, args, exhaustive = _plan(E, F, cap, seed)
    rep.exhaustive = exhaustive
    nt, na = pick.shape if len(tup) else (0, 0)
    # flatten into case rows, in enumeration order
    chars = np.repeat(tup, na, axis=0) if nt else np.zeros((0, len(E.slots)), dtype=np.int64)
    xy = args[pick.reshape(-1)] if nt else np.zeros((0, 2), dtype=np.int64)
    ncases = len(chars)
    variants = _f_variants(F) if E.needs_f else [None]
    nv = len(variants)

    kernels = _Kernels(F, backend, twist)
    step = _chunk_rows(kernels.get())
    total_rows = ncases * nv
    first_bad = None
    failed = 0
    for start in range(0, total_rows, step):
        rows = np.arange(start, min(start + step, total_rows))
        ci, vi = rows // nv, rows % nv
        fnum = fden = None
        if E.needs_f:
            fnum = np.empty((len(rows), F.m), dtype=np.int64)
            fden = np.empty((len(rows), F.m), dtype=np.int64)
            for r, (i, v) in enumerate(zip(ci.tolist(), vi.tolist())):
                fnum[r], fden[r] = _weights_table(F, _f_descr(*variants[v], seed, E, F, i))
        ok = _equal_rows(E, kernels, chars[ci], xy[ci], fnum, fden)
        bad = np.flatnonzero(~ok)
        failed += len(bad)
        if first_bad is None and len(bad):
            first_bad = int(rows[bad[0]])
    rep.attempted = total_rows
    if not total_rows:
        rep.reason = "no admissible cases over this field"
    rep.failed = failed
    rep.passed = total_rows - failed
    if first_bad is not None:
        i, v = divmod(first_bad, nv)
        fd = _f_descr(*variants[v], seed, E, F, i) if E.needs_f else None
        rep.counterexample = _counterexample(E, F, twist, i, chars[i], args_row=xy[i], fdescr=fd)
    if timing:
        rep.ms = round((time.perf_counter() - t0) * 1000.0, 3)
    return rep


def _counterexample(E, F, twist, index, chars, args_row, fdescr) -> dict:
    lhs, rhs = _exact_pair(E, F, twist, chars, args_row, fdescr)
    return {
        "case": index,
        "chars": dict(zip(E.slots, map(int, chars))),
        "args": _args_dict(E, args_row),
        "f": fdescr,
        "lhs": [v.to_json() for v in lhs],
        "rhs": [v.to_json() for v in rhs],
    }


def _exact_pair(E, F, twist, chars, args_row, fdescr):
    K = Kernel(F, "exact", twist)
    fnum = fden = None
    if E.needs_f:
        n, d = _weights_table(F, fdescr)
        fnum, fden = n[None, :], d[None, :]
    lhs, rhs = _evaluate(E, K, np.asarray([chars]), np.asarray([args_row]), fnum, fden)
    return [v[0].to_cyclo() for v in lhs], [v[0].to_cyclo() for v in rhs]


def eval_identity_case(
    identity_id: str, field, case: Case | dict, f_seed: int | None = None, twist: int = 1, f: dict | None = None
) -> tuple[list[CycloValue], list[CycloValue]]:
    """Evaluate both sides of one case exactly.

    ``case`` carries ``chars`` and ``args``.  Identities quantified over a
    weight need ``f_seed`` (as recorded in a counterexample) or an explicit
    weight description ``f`` such as ``{"kind": "delta", "mu0": j}``.
    """
    E = lookup(identity_id)
    F = construct_field(field)
    _check_field(E, F)
    chars = case.chars if isinstance(case, Case) else case["chars"]
    args = case.args if isinstance(case, Case) else case.get("args", {})
    tup = np.asarray([[int(chars[s]) % F.m for s in E.slots]])
    if not E.admissible(F.m, SimpleNamespace(**{s: tup[:, i] for i, s in enumerate(E.slots)}))[0]:
        raise InadmissibleCase(f"{chars} violates the hypotheses of {E.id}")
    row = [int(args.get(name, 0)) for name in ("x", "y")]
    allowed = E.args(F)[:, : len(E.arg_names)]
    if E.arg_names and not (allowed == row[: len(E.arg_names)]).all(axis=1).any():
        raise InadmissibleCase(f"{args} is outside the argument domain of {E.id}")
    if E.needs_f:
        if f is None:
            if f_seed is None:
                raise ValueError(f"{E.id} is quantified over f; pass f_seed")
            f = {"kind": "seeded", "f_seed": int(f_seed)}
    else:
        f = None
    return _exact_pair(E, F, twist, tup[0], row, f)


# -- suites -------------------------------------------------------------------------------


def _suite_task(job):
    identity_id, spec, cap, seed, backend, twist, timing = job
    return verify_identity(identity_id, spec, cap, seed, backend, twist, timing)


def run_suite(
    ids,
    fields,
    cap: Cap | None = None,
    seed: int = DEFAULT_SEED,
    backend: str = "mod",
    twist: int = 1,
    jobs: int = 1,
    timing: bool = False,
) -> list[VerificationReport]:
    """Verify every identity over every field; results come back in (field, id) order."""
    specs = [str(construct_field(f).spec) for f in fields]
    work = [(i, s, cap, seed, backend, twist, timing) for s in specs for i in ids]
    if jobs <= 1 or len(work) <= 1:
        return [_suite_task(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_suite_task, work, chunksize=1))
