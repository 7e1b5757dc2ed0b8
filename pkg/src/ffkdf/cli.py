"""Command-line front end.

    ffkdf field 3^2
    ffkdf gauss --field 5
    ffkdf eval nFm --field 5 --num 1,1 --den 2 --x 3
    ffkdf eval kdf --field 7 --a 1 --b 2 --c 3 --x 2 --y 5
    ffkdf verify BASE-01 THM-1 --field 5 --field 7
    ffkdf suite --ids 'BASE-*' --field 3 --field 5 --jobs 4
    ffkdf cache warm --cache-dir ~/.cache/ffkdf --field 13

Every command writes line-delimited JSON under ``--format json`` (the
default).  Exit status: 0 success, 1 some identity failed, 2 usage or parse
error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import fnmatch
import json
import math
import sys

from . import cache
from .catalog import list_identities, lookup
from .characters import GaussTable, gauss_table, level
from .cyclo import CycloValue
from .errors import FFKDFError, IoError, NotFound, ParseError
from .field import construct_field
from .hypergeom import KdFParams, hyp_F, kdf_eval, nFm
from .params import ParamMultiset
from .verify import DEFAULT_SEED, Cap, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
DEFAULT_SUITE_FIELDS = ("3", "2^2", "5")


class _Out:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self._csv = None

    def emit(self, rec: dict):
        if self.fmt == "json":
            self.stream.write(json.dumps(rec, sort_keys=True) + "\n")
        elif self.fmt == "csv":
            flat = {k: _flat(v) for k, v in rec.items()}
            lossy = any(_is_cyclo(v) for v in rec.values())
            flat["warning"] = "float projection; use --format json for exact values" if lossy else ""
            if self._csv is None:
                self._csv = csv.DictWriter(self.stream, fieldnames=list(flat), extrasaction="ignore")
                self._csv.writeheader()
            self._csv.writerow(flat)
        else:
            self.stream.write("  ".join(f"{k}={_pretty(v)}" for k, v in rec.items()) + "\n")


def _is_cyclo(v) -> bool:
    return isinstance(v, dict) and "level" in v and "coeffs" in v


def _flat(v):
    if _is_cyclo(v):
        z = CycloValue.from_json(v).to_complex()
        return f"{z.real:.12g}{z.imag:+.12g}j"
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return v


def _pretty(v):
    if _is_cyclo(v):
        z = CycloValue.from_json(v).to_complex()
        return f"{z.real:.6f}{z.imag:+.6f}i"
    if isinstance(v, float):
        return f"{v:.6g}"
    return v if not isinstance(v, (dict, list)) else json.dumps(v, sort_keys=True)


def _value_record(v: CycloValue) -> dict:
    z = v.to_complex()
    return {"value": v.to_json(), "float": [z.real, z.imag]}


def _fields(args) -> list[str]:
    return list(args.field) if args.field else []


def _one_field(args):
    fs = _fields(args)
    spec = getattr(args, "spec", None) or (fs[0] if fs else None)
    if spec is None:
        raise ParseError("a field is required (--field SPEC)")
    return construct_field(spec, args.field_cap)


def _cached_table(args, F) -> GaussTable:
    T = gauss_table(F, args.twist)
    if args.cache_dir:
        try:
            vals = cache.load(args.cache_dir, F, args.twist)
        except IoError:
            vals = None
        if vals is not None and vals != T.g:
            raise IoError("cached Gauss table disagrees with a fresh computation")
    return T


# -- commands -----------------------------------------------------------------------------


def cmd_field(args, out: _Out) -> int:
    F = _one_field(args)
    out.emit({"spec": str(F.spec), "p": F.p, "f": F.f, "q": F.q, "generator": int(F.generator),
              "modulus": list(F.modulus), "level": level(F)})
    return EXIT_OK


def cmd_chars(args, out: _Out) -> int:
    F = _one_field(args)
    N = level(F)
    for j in range(F.m):
        # chi_j(g^k) = zeta_N^(p j k); listed as exponents of zeta_N, None at 0
        vals = [None] + [int(F.p * j * int(F.log_table[x]) % N) for x in range(1, F.q)]
        out.emit({"field": str(F.spec), "j": j, "order": F.m // math.gcd(j, F.m), "level": N, "exponents": vals})
    return EXIT_OK


def cmd_gauss(args, out: _Out) -> int:
    F = _one_field(args)
    T = _cached_table(args, F)
    for j in range(F.m):
        rec = {"field": str(F.spec), "j": j, "twist": args.twist}
        rec.update({"value": T.g[j].to_json(), "variant": T.gc[j].to_json()})
        z = T.g[j].to_complex()
        rec["float"] = [z.real, z.imag]
        out.emit(rec)
    return EXIT_OK


def cmd_eval(args, out: _Out) -> int:
    F = _one_field(args)
    ms = lambda s: ParamMultiset.parse(F, s or "")  # noqa: E731
    if args.kind == "kdf":
        params = KdFParams(ms(args.a), ms(args.b), ms(args.c), ms(args.ap), ms(args.bp), ms(args.cp))
        v = kdf_eval(params, args.x, args.y, args.twist)
    elif args.kind == "F":
        v = hyp_F(ms(args.num), ms(args.den), args.x, args.twist)
    elif args.kind == "nFm":
        v = nFm(ms(args.num), ms(args.den), args.x, field=F, twist=args.twist)
    elif args.kind == "gauss":
        v = gauss_table(F, args.twist).g[args.j % F.m]
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown kind {args.kind}")
    rec = {"field": str(F.spec), "kind": args.kind}
    rec.update(_value_record(v))
    out.emit(rec)
    return EXIT_OK


def _backend(args) -> str:
    # exact equality is decided in the certified residue ring
    return "mod" if args.backend == "exact" else args.backend


def _emit_reports(reports, out: _Out, args) -> int:
    failed = False
    for r in reports:
        rec = r.to_json()
        if not args.timing:
            rec["ms"] = None
        out.emit(rec)
        failed |= r.failed > 0
    return EXIT_FAIL if failed else EXIT_OK


def cmd_verify(args, out: _Out) -> int:
    for i in args.ids:
        d = lookup(i)
        if d.fixture and not args.with_fixtures:
            raise NotFound(f"{i} is a test fixture; pass --with-fixtures")
    fields = _fields(args) or list(DEFAULT_SUITE_FIELDS)
    reports = run_suite(args.ids, fields, args.cap, args.seed, _backend(args), args.twist, args.jobs, args.timing)
    return _emit_reports(reports, out, args)


def cmd_suite(args, out: _Out) -> int:
    ids = [d.id for d in list_identities(include_fixtures=args.with_fixtures)]
    if args.ids:
        ids = [i for i in ids if any(fnmatch.fnmatchcase(i, pat) for pat in args.ids)]
    fields = _fields(args) or list(DEFAULT_SUITE_FIELDS)
    reports = run_suite(ids, fields, args.cap, args.seed, _backend(args), args.twist, args.jobs, args.timing)
    return _emit_reports(reports, out, args)


def cmd_list(args, out: _Out) -> int:
    for d in list_identities(include_fixtures=args.with_fixtures):
        out.emit(d.summary())
    return EXIT_OK


def cmd_cache(args, out: _Out) -> int:
    if args.action == "warm":
        if not args.cache_dir:
            raise IoError("no cache directory configured")
        fields = _fields(args) or list(DEFAULT_SUITE_FIELDS)
        for path in cache.warm(args.cache_dir, fields, args.twist):
            out.emit({"action": "warm", "file": str(path)})
    elif args.action == "clear":
        out.emit({"action": "clear", "removed": cache.clear(args.cache_dir)})
    else:
        st = cache.stat(args.cache_dir)
        out.emit({"action": "stat", "dir": st["dir"], "files": st["files"], "entries": st["entries"]})
        for t in st["tables"]:
            out.emit(t)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------------


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def _cap(text: str) -> Cap:
    try:
        cap = Cap.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad cap {text!r}") from exc
    if cap.tuples < 1 or cap.args < 1:
        raise argparse.ArgumentTypeError("cap must be >= 1")
    return cap


def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--field", action="append", default=d(None), metavar="SPEC",
                   help="field spec p, p^f or p^f/c0,...,cf (repeatable)")
    p.add_argument("--backend", choices=("exact", "float"), default=d("exact"))
    p.add_argument("--cap", type=_cap, default=d(Cap()), help="TUPLESxARGS, e.g. 500x50, or 'all'")
    p.add_argument("--seed", type=_seed, default=d(DEFAULT_SEED))
    p.add_argument("--jobs", type=int, default=d(1))
    p.add_argument("--cache-dir", default=d(None))
    p.add_argument("--format", choices=("json", "csv", "pretty"), default=d("json"))
    p.add_argument("--twist", type=int, default=d(1), help="additive character psi(x) = zeta_p^Tr(c x)")
    p.add_argument("--timing", action="store_true", default=d(False), help="record wall time in reports")
    p.add_argument("--with-fixtures", action="store_true", default=d(False))
    p.add_argument("--field-cap", type=int, default=d(1 << 16), help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ffkdf", description="Hypergeometric character sums over finite fields.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        _global_flags(sp, suppress=True)
        sp.set_defaults(func=fn)
        return sp

    sp = add("field", cmd_field, help="field summary")
    sp.add_argument("spec", nargs="?")
    sp = add("chars", cmd_chars, help="multiplicative character table")
    sp.add_argument("spec", nargs="?")
    sp = add("gauss", cmd_gauss, help="Gauss sums g and g-variant for every character")
    sp.add_argument("spec", nargs="?")

    sp = add("eval", cmd_eval, help="evaluate one function exactly")
    sp.add_argument("kind", choices=("F", "nFm", "kdf", "gauss"))
    for name in ("a", "b", "c", "ap", "bp", "cp", "num", "den"):
        sp.add_argument(f"--{name}", default="", help="multiset such as 1,3^2 ('-' for empty)")
    sp.add_argument("--x", type=int, default=0)
    sp.add_argument("--y", type=int, default=0)
    sp.add_argument("--j", type=int, default=0)

    sp = add("verify", cmd_verify, help="verify named identities")
    sp.add_argument("ids", nargs="+")
    sp = add("suite", cmd_suite, help="verify every catalog entry (optionally filtered)")
    sp.add_argument("--ids", action="append", default=[], metavar="GLOB")
    add("list", cmd_list, help="list catalog entries")
    sp = add("cache", cmd_cache, help="manage the Gauss-sum cache")
    sp.add_argument("action", choices=("warm", "clear", "stat"))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    out = _Out(args.format)
    try:
        return args.func(args, out)
    except IoError as exc:
        print(f"ffkdf: {exc}", file=sys.stderr)
        return EXIT_IO
    except (NotFound, ParseError) as exc:
        print(f"ffkdf: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FFKDFError as exc:
        print(f"ffkdf: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"ffkdf: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
