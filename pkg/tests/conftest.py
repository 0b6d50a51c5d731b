"""Session-scoped preset sweeps shared by the module and acceptance tests.

Each fixture runs the full 4096-sample sweep once (with conservation
diagnostics enabled) and returns the SweepResult plus the wall time.
"""

import time

import pytest

from revivalscope.presets import preset
from revivalscope.sweep import run_sweep


def _timed_sweep(name, tmp_path_factory):
    out = tmp_path_factory.mktemp(name.replace("-", "_"))
    t0 = time.perf_counter()
    result = run_sweep(preset(name), out_dir=str(out), diagnostics=True)
    elapsed = time.perf_counter() - t0
    return result, elapsed


@pytest.fixture(scope="session")
def fig1_sweep(tmp_path_factory):
    return _timed_sweep("squarewell-fig1", tmp_path_factory)


@pytest.fixture(scope="session")
def fig3_sweep(tmp_path_factory):
    return _timed_sweep("squarewell-fig3", tmp_path_factory)


@pytest.fixture(scope="session")
def fig4_sweep(tmp_path_factory):
    return _timed_sweep("bouncer-fig4", tmp_path_factory)


@pytest.fixture(scope="session")
def fig5_sweep(tmp_path_factory):
    return _timed_sweep("morse-fig5", tmp_path_factory)


@pytest.fixture(scope="session")
def all_sweeps(fig1_sweep, fig3_sweep, fig4_sweep, fig5_sweep):
    return {
        "squarewell-fig1": fig1_sweep,
        "squarewell-fig3": fig3_sweep,
        "bouncer-fig4": fig4_sweep,
        "morse-fig5": fig5_sweep,
    }
