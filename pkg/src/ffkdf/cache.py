"""On-disk cache of Gauss-sum tables, one JSON file per (field, twist)."""
from __future__ import annotations

import json
import os
from pathlib import Path

from .characters import GaussTable, gauss_table, level
from .cyclo import CycloValue
from .errors import IoError
from .field import FieldCtx, construct_field

SUFFIX = ".gauss.json"


def _header(F: FieldCtx, twist: int) -> dict:
    return {
        "spec": str(F.spec),
        "generator": int(F.generator),
        "level": level(F),
        "modulus": list(F.modulus),
        "twist": twist,
    }


def cache_path(cache_dir, F: FieldCtx, twist: int = 1) -> Path:
    mod = "-".join(map(str, F.modulus))
    return Path(cache_dir) / f"p{F.p}_f{F.f}_m{mod}_g{F.generator}_t{twist}{SUFFIX}"


def dumps_table(F: FieldCtx, table: GaussTable) -> str:
    doc = {"header": _header(F, table.twist), "entries": [g.to_json() for g in table.g]}
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _require_dir(cache_dir) -> Path:
    if cache_dir is None:
        raise IoError("no cache directory configured")
    d = Path(cache_dir)
    if not d.is_dir():
        raise IoError(f"cache directory {d} does not exist")
    return d


def warm(cache_dir, fields, twist: int = 1) -> list[Path]:
    """Compute and persist Gauss tables; creates the directory if needed."""
    d = Path(cache_dir)
    try:
        d.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoError(str(exc)) from exc
    written = []
    for spec in fields:
        F = construct_field(spec)
        path = cache_path(d, F, twist)
        tmp = path.with_suffix(".tmp")
        try:
            tmp.write_text(dumps_table(F, gauss_table(F, twist)))
            os.replace(tmp, path)
        except OSError as exc:
            raise IoError(str(exc)) from exc
        written.append(path)
    return written


def load(cache_dir, field, twist: int = 1) -> list[CycloValue] | None:
    """Gauss sums g(chi_j), j = 0..q-2, or None on a miss or a stale header."""
    F = construct_field(field)
    path = cache_path(_require_dir(cache_dir), F, twist)
    if not path.exists():
        return None
    try:
        doc = json.loads(path.read_text())
    except (OSError, ValueError) as exc:
        raise IoError(f"unreadable cache file {path}: {exc}") from exc
    if doc.get("header") != _header(F, twist):
        return None
    return [CycloValue.from_json(e) for e in doc["entries"]]


def clear(cache_dir) -> int:
    d = _require_dir(cache_dir)
    n = 0
    for path in d.glob("*" + SUFFIX):
        try:
            path.unlink()
        except OSError as exc:
            raise IoError(str(exc)) from exc
        n += 1
    return n


def stat(cache_dir) -> dict:
    d = _require_dir(cache_dir)
    files = []
    for path in sorted(d.glob("*" + SUFFIX)):
        try:
            doc = json.loads(path.read_text())
        except (OSError, ValueError) as exc:
            raise IoError(f"unreadable cache file {path}: {exc}") from exc
        files.append({"file": path.name, "spec": doc["header"]["spec"], "entries": len(doc["entries"])})
    return {"dir": str(d), "files": len(files), "entries": sum(f["entries"] for f in files), "tables": files}
