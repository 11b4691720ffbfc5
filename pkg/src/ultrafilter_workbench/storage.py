from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import GroundMismatchError, InputFormatError
from .filters import PFilter
from .semigroup import FiniteSemigroup, validate
from .windows import FSGenerator, WindowSet, fs_set

DATA_DIR = Path("data")
SEMIGROUPS_DIR = DATA_DIR / "semigroups"
REPORTS_DIR = Path("reports")


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False, sort_keys=True)


def dump_json(path: Path, data: Any) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps(data) + "\n", encoding="utf-8")


def load_json_optional(path: Path) -> Any:
    if not path.exists():
        return None
    return json.loads(path.read_text(encoding="utf-8"))


def load_json(path: Path) -> Any:
    try:
        data = load_json_optional(path)
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{path}: invalid JSON ({e})") from e
    if data is None:
        raise InputFormatError(f"{path}: no such file")
    return data


def semigroup_from_dict(data: Any, label: str | None = None) -> FiniteSemigroup:
    if not isinstance(data, dict) or "table" not in data:
        raise InputFormatError('a semigroup file needs {"n": int, "table": [[...]]}')
    table = data["table"]
    if not isinstance(table, list) or not all(isinstance(row, list) for row in table):
        raise InputFormatError("table must be a list of rows")
    n = data.get("n", len(table))
    if n != len(table):
        raise InputFormatError(f"n = {n} but the table has {len(table)} rows")
    return validate(table, label=data.get("label", label))


def load_semigroup(path: Path) -> FiniteSemigroup:
    return semigroup_from_dict(load_json(path), label=path.stem)


def parse_int_list(text: str, name: str = "list") -> list[int]:
    items = [part.strip() for part in text.split(",") if part.strip()]
    try:
        return [int(part) for part in items]
    except ValueError as e:
        raise InputFormatError(f"{name} must be comma-separated integers, got {text!r}") from e


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def int_values(values: Any, name: str) -> list[int]:
    if not isinstance(values, list) or not all(_is_int(v) for v in values):
        raise InputFormatError(f"{name} must be a list of integers, got {values!r}")
    return values


def _file_arg(arg: str) -> Path:
    return Path(arg[1:] if arg.startswith("@") else arg)


def resolve_table(value: str, base: Path | None = None) -> Path:
    """A table path as given, next to `base`, or by name under data/semigroups."""
    path = Path(value)
    candidates = [base / path] if base is not None and not path.is_absolute() else []
    candidates += [path, SEMIGROUPS_DIR / path.name]
    for candidate in candidates:
        if candidate.exists():
            return candidate
    raise InputFormatError(f"table file {value} not found (also looked in {SEMIGROUPS_DIR})")


def filter_from_dict(S: FiniteSemigroup, data: Any) -> PFilter:
    if not isinstance(data, dict) or not isinstance(data.get("support"), list):
        raise InputFormatError('a filter needs {"support": [...]}')
    return PFilter.of(S, int_values(data["support"], "support"))


def load_filter(arg: str, ground: FiniteSemigroup | None = None) -> PFilter:
    """`{"semigroup": <table ref>, "support": [...]}` from `@path`; the ref resolves next to the file."""
    path = _file_arg(arg)
    data = load_json(path)
    if not isinstance(data, dict):
        raise InputFormatError(f"{path}: a filter file must be a JSON object")
    ref = data.get("semigroup")
    if ref is not None:
        if not isinstance(ref, str):
            raise InputFormatError(f'{path}: "semigroup" must name a table file')
        named = load_semigroup(resolve_table(ref, base=path.parent))
        if ground is not None and named.table != ground.table:
            raise GroundMismatchError(f"{path} refers to {ref}, which differs from the --table semigroup")
        ground = ground or named
    if ground is None:
        raise InputFormatError(f'{path}: no "semigroup" in the file and no --table given')
    return filter_from_dict(ground, data)


def window_from_dict(data: Any) -> WindowSet:
    if not isinstance(data, dict) or not _is_int(data.get("horizon")):
        raise InputFormatError('a window needs {"horizon": int, "members" | "fs_of": [...]}')
    horizon = data["horizon"]
    if "fs_of" in data:
        return fs_set(FSGenerator.of(int_values(data["fs_of"], "fs_of")), horizon)
    if "members" in data:
        return WindowSet.of(horizon, int_values(data["members"], "members"))
    raise InputFormatError('a window needs either "members" or "fs_of"')


def load_window(arg: str) -> WindowSet:
    """`@path` or a bare path to a window JSON file."""
    return window_from_dict(load_json(_file_arg(arg)))
