import sys

import pytest

from jackmaps import jack


@pytest.fixture(autouse=True, scope="session")
def _oracle_cache(tmp_path_factory):
    # keep the oracle's disk cache inside the test session
    jack.set_cache_dir(str(tmp_path_factory.mktemp("oracle-cache")))
    yield
    jack.set_cache_dir(None)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
