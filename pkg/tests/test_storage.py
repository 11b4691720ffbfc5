import json
from pathlib import Path

import pytest

from ultrafilter_workbench.errors import EmptySupportError, GroundMismatchError, InputFormatError, NonAssociativeError
from ultrafilter_workbench.semigroup import curated
from ultrafilter_workbench.storage import (
    dump_json,
    dumps,
    filter_from_dict,
    load_json,
    load_filter,
    load_json_optional,
    load_semigroup,
    load_window,
    parse_int_list,
    resolve_table,
    semigroup_from_dict,
    window_from_dict,
)
from ultrafilter_workbench.windows import WindowSet

SEMIGROUP_FILES = Path(__file__).resolve().parents[1] / "data" / "semigroups"


@pytest.mark.parametrize("S", curated(), ids=lambda S: S.label)
def test_data_files_match_curated_tables(S):
    loaded = load_semigroup(SEMIGROUP_FILES / f"{S.label.lower()}.json")
    assert loaded.label == S.label
    assert loaded.table == S.table


def test_label_defaults_to_file_stem(tmp_path):
    path = tmp_path / "custom.json"
    path.write_text(json.dumps({"n": 2, "table": [[0, 0], [0, 0]]}), encoding="utf-8")
    assert load_semigroup(path).label == "custom"


def test_semigroup_file_errors(tmp_path):
    with pytest.raises(InputFormatError):
        semigroup_from_dict({"n": 3, "table": [[0, 0], [0, 0]]})
    with pytest.raises(InputFormatError):
        semigroup_from_dict([[0]])
    with pytest.raises(NonAssociativeError):
        semigroup_from_dict({"table": [[1, 0], [0, 0]]})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(InputFormatError):
        load_json(bad)
    with pytest.raises(InputFormatError):
        load_json(tmp_path / "missing.json")
    assert load_json_optional(tmp_path / "missing.json") is None


def test_filter_from_dict(semigroups):
    Z4 = semigroups["Z4"]
    assert filter_from_dict(Z4, {"support": [2, 0]}).support.sorted() == [0, 2]
    with pytest.raises(InputFormatError):
        filter_from_dict(Z4, {"members": [0]})
    with pytest.raises(EmptySupportError):
        filter_from_dict(Z4, {"support": []})
    with pytest.raises(InputFormatError):
        filter_from_dict(Z4, {"support": [0, "2"]})


def test_window_from_dict():
    assert window_from_dict({"horizon": 10, "fs_of": [1, 2]}) == WindowSet.of(10, [1, 2, 3])
    assert window_from_dict({"horizon": 5, "members": [4, 2]}).sorted() == [2, 4]
    with pytest.raises(InputFormatError):
        window_from_dict({"horizon": 5})
    with pytest.raises(InputFormatError):
        window_from_dict({"members": [1]})


@pytest.mark.parametrize(
    "data",
    [
        {"horizon": 10, "fs_of": ["a", 2]},
        {"horizon": 10, "fs_of": [1.5, 2]},
        {"horizon": 10, "members": [1.9, 2.5]},
        {"horizon": 10, "members": [True, 2]},
        {"horizon": 10, "members": 3},
        {"horizon": 10.0, "members": [1]},
        {"horizon": True, "members": [1]},
    ],
)
def test_window_values_must_be_integers(data):
    with pytest.raises(InputFormatError):
        window_from_dict(data)


@pytest.mark.parametrize("table", [[[0.9, 0], [0, 1.2]], [[0, "0"], [0, 0]], [[False, False], [False, False]]])
def test_table_entries_must_be_integers(table):
    with pytest.raises(InputFormatError):
        semigroup_from_dict({"n": 2, "table": table})


def test_resolve_table_looks_next_to_base(tmp_path):
    dump_json(tmp_path / "mine.json", {"n": 1, "table": [[0]]})
    assert resolve_table("mine.json", base=tmp_path) == tmp_path / "mine.json"
    assert resolve_table(str(tmp_path / "mine.json")) == tmp_path / "mine.json"
    with pytest.raises(InputFormatError):
        resolve_table("mine.json", base=tmp_path / "elsewhere")


def test_load_filter_resolves_its_semigroup(tmp_path, semigroups):
    dump_json(tmp_path / "z4.json", semigroups["Z4"].to_dict())
    path = tmp_path / "f.json"
    dump_json(path, {"semigroup": "z4.json", "support": [0, 2]})
    F = load_filter(f"@{path}")
    assert F.ground.table == semigroups["Z4"].table
    assert F.support.sorted() == [0, 2]
    assert load_filter(str(path), semigroups["Z4"]).ground is semigroups["Z4"]


def test_load_filter_errors(tmp_path, semigroups):
    dump_json(tmp_path / "z4.json", semigroups["Z4"].to_dict())
    named = tmp_path / "named.json"
    dump_json(named, {"semigroup": "z4.json", "support": [0]})
    with pytest.raises(GroundMismatchError):
        load_filter(f"@{named}", semigroups["Z6"])
    bare = tmp_path / "bare.json"
    dump_json(bare, {"support": [0]})
    with pytest.raises(InputFormatError):
        load_filter(f"@{bare}")
    assert load_filter(f"@{bare}", semigroups["Z6"]).support.sorted() == [0]
    dump_json(bare, {"semigroup": 4, "support": [0]})
    with pytest.raises(InputFormatError):
        load_filter(f"@{bare}")
    dump_json(bare, [0, 1])
    with pytest.raises(InputFormatError):
        load_filter(f"@{bare}")


def test_load_window_accepts_at_prefix(tmp_path):
    path = tmp_path / "w.json"
    dump_json(path, {"horizon": 7, "members": [1, 6]})
    assert load_window(f"@{path}") == load_window(str(path)) == WindowSet.of(7, [1, 6])


def test_parse_int_list():
    assert parse_int_list("1, 2,4,") == [1, 2, 4]
    assert parse_int_list("") == []
    with pytest.raises(InputFormatError):
        parse_int_list("1,x", "--gens")


def test_dump_json_sorts_keys(tmp_path):
    path = tmp_path / "nested" / "out.json"
    dump_json(path, {"b": 1, "a": [1, 2]})
    text = path.read_text(encoding="utf-8")
    assert text.index('"a"') < text.index('"b"')
    assert text.endswith("\n")
    assert dumps({"b": 1, "a": 2}) == dumps({"a": 2, "b": 1})
