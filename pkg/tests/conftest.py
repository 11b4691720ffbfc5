from __future__ import annotations

from pathlib import Path

import pytest

from ultrafilter_workbench.semigroup import curated

ROOT = Path(__file__).resolve().parents[1]
SEMIGROUP_FILES = ROOT / "data" / "semigroups"


@pytest.fixture(scope="session")
def semigroups():
    return {S.label: S for S in curated()}


@pytest.fixture
def table_path():
    def _path(name: str) -> str:
        return str(SEMIGROUP_FILES / f"{name}.json")

    return _path
