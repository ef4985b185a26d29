"""JSON results cache for :class:`~sizeramsey.search.SearchRecord`.

The file is a JSON array with one record object per line, keyed by
(target, n, connected_only).  Storing a record replaces any record with the
same key; loading refuses two records with one key and different results.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from sizeramsey.patterns import TargetPattern
from sizeramsey.search import SearchRecord, check_exact_record

DEFAULT_CACHE = "ramsey_results.json"

FIELDS = (
    "target", "n", "connected_only", "status", "value", "lo", "hi",
    "witness", "graphs_examined", "wall_time", "engine_version",
)
_TYPES = {
    "target": str, "n": int, "connected_only": bool, "status": str,
    "value": (int, type(None)), "lo": (int, type(None)), "hi": (int, type(None)),
    "witness": (str, type(None)), "graphs_examined": int,
    "wall_time": (int, float), "engine_version": str,
}


class CacheError(ValueError):
    pass


def default_cache_path() -> Path:
    return Path(os.environ.get("RAMSEY_CACHE", DEFAULT_CACHE))


def to_json(rec: SearchRecord) -> dict:
    return {
        "target": str(rec.target), "n": rec.n, "connected_only": rec.connected_only,
        "status": rec.status, "value": rec.value, "lo": rec.lo, "hi": rec.hi,
        "witness": rec.witness, "graphs_examined": rec.graphs_examined,
        "wall_time": round(rec.wall_time, 6), "engine_version": rec.engine_version,
    }


def from_json(obj: dict, line: int) -> SearchRecord:
    if not isinstance(obj, dict):
        raise CacheError(f"line {line}: record is not a JSON object")
    for name in FIELDS:
        if name not in obj:
            raise CacheError(f"line {line}: missing field '{name}'")
        val = obj[name]
        expect = _TYPES[name]
        if isinstance(val, bool) and expect is int:
            raise CacheError(f"line {line}: field '{name}' must be an integer")
        if not isinstance(val, expect):
            raise CacheError(f"line {line}: field '{name}' has wrong type {type(val).__name__}")
    extra = set(obj) - set(FIELDS)
    if extra:
        raise CacheError(f"line {line}: unknown field '{sorted(extra)[0]}'")
    try:
        target = TargetPattern.parse(obj["target"])
        return SearchRecord(
            target, obj["n"], obj["connected_only"], obj["status"],
            value=obj["value"], lo=obj["lo"], hi=obj["hi"], witness=obj["witness"],
            graphs_examined=obj["graphs_examined"], wall_time=float(obj["wall_time"]),
            engine_version=obj["engine_version"],
        )
    except ValueError as exc:
        raise CacheError(f"line {line}: {exc}") from None


def _record_lines(text: str) -> list[int]:
    """Line number on which each top-level array element starts."""
    lines = []
    depth = 0
    in_str = esc = False
    line = 1
    for ch in text:
        if ch == "\n":
            line += 1
        if in_str:
            if esc:
                esc = False
            elif ch == "\\":
                esc = True
            elif ch == '"':
                in_str = False
            continue
        if ch == '"':
            in_str = True
        elif ch in "[{":
            if depth == 1:
                lines.append(line)
            depth += 1
        elif ch in "]}":
            depth -= 1
    return lines


def load(path: str | Path, verify: bool = True) -> dict[tuple[str, int, bool], SearchRecord]:
    """Read the cache; a missing file is an empty table.

    With ``verify`` every exact record's witness is re-checked (edge count,
    connectivity, arrowing).
    """
    path = Path(path)
    if not path.exists():
        return {}
    text = path.read_text()
    if not text.strip():
        return {}
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CacheError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, list):
        raise CacheError(f"{path}: line 1: top level must be a JSON array")
    starts = _record_lines(text)
    table: dict[tuple[str, int, bool], SearchRecord] = {}
    for i, obj in enumerate(data):
        line = starts[i] if i < len(starts) else 1
        rec = from_json(obj, line)
        prev = table.get(rec.key)
        if prev is not None and not prev.same_result(rec):
            raise CacheError(
                f"{path}: line {line}: conflicting duplicate record for {rec.key}")
        if verify:
            problems = check_exact_record(rec)
            if problems:
                raise CacheError(f"{path}: line {line}: field 'witness': {problems[0]}")
        table[rec.key] = rec
    return table


def dump(records, path: str | Path) -> None:
    path = Path(path)
    body = ",\n".join(json.dumps(to_json(r), sort_keys=False) for r in records)
    text = "[\n" + body + "\n]\n" if body else "[]\n"
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def store(path: str | Path, rec: SearchRecord) -> dict[tuple[str, int, bool], SearchRecord]:
    """Insert ``rec``, superseding any record with the same key."""
    table = load(path, verify=False)
    table[rec.key] = rec
    ordered = sorted(table.values(), key=lambda r: r.key)
    dump(ordered, path)
    return {r.key: r for r in ordered}
