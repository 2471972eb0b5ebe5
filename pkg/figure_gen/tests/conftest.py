"""Shared fixtures for the rendering tests."""
import pytest

from synthetic_inputs import populate_run_dir


@pytest.fixture
def full_run_dir(tmp_path):
    run_dir = tmp_path / "run"
    run_dir.mkdir()
    return populate_run_dir(run_dir)
