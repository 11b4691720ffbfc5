import logging

import pytest

from ultrafilter_workbench.config import (
    DEFAULT_NODE_BUDGET,
    DEFAULT_WORKERS,
    RunConfig,
    env_node_budget,
    env_seed,
    env_workers,
    log_level,
)
from ultrafilter_workbench.errors import InputFormatError


def test_env_helpers(monkeypatch):
    monkeypatch.setenv("WORKBENCH_WORKERS", "3")
    monkeypatch.setenv("WORKBENCH_SEED", "17")
    monkeypatch.setenv("WORKBENCH_NODE_BUDGET", "500")
    assert (env_workers(), env_seed(), env_node_budget()) == (3, 17, 500)


def test_env_helpers_fall_back(monkeypatch):
    monkeypatch.setenv("WORKBENCH_WORKERS", "many")
    monkeypatch.setenv("WORKBENCH_NODE_BUDGET", "0")
    monkeypatch.delenv("WORKBENCH_SEED", raising=False)
    assert env_workers() == DEFAULT_WORKERS
    assert env_node_budget() == 1
    assert env_seed() == 0


def test_log_level(monkeypatch):
    monkeypatch.setenv("WORKBENCH_LOG", "Debug")
    assert log_level() == logging.DEBUG
    monkeypatch.setenv("WORKBENCH_LOG", "verbose")
    assert log_level() == logging.ERROR


@pytest.mark.parametrize(
    "overrides",
    [{"horizon": 0}, {"budget": 0}, {"workers": 0}, {"output": "yaml"}],
)
def test_run_config_rejects_bad_values(overrides):
    with pytest.raises(InputFormatError):
        RunConfig(subcommand="fal", **overrides).validate()


def test_run_config_defaults():
    cfg = RunConfig(subcommand="folkman").validate()
    assert cfg.budget == DEFAULT_NODE_BUDGET and cfg.timing
