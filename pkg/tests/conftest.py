import shutil
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("exact", deadline=None, derandomize=True)
settings.load_profile("exact")

from cuboidcert.pipeline.golden import DEFAULT_DIR, load_golden
from cuboidcert.pipeline.runner import RunConfig, run_all


@pytest.fixture(scope="session")
def golden():
    return load_golden()


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    return tmp_path_factory.mktemp("cache")


@pytest.fixture(scope="session")
def certificate(golden, cache_dir):
    """One full run shared by the whole session; it also fills the cache."""
    return run_all(RunConfig(cache_dir=cache_dir, jobs=1), golden=golden)


@pytest.fixture
def golden_copy(tmp_path):
    dst = tmp_path / "golden"
    shutil.copytree(DEFAULT_DIR, dst)
    return Path(dst)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, text = results[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
