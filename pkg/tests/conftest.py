import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from matchsign.kernels import available_backends, load_backend  # noqa: E402


@pytest.fixture(params=available_backends())
def backend(request):
    return load_backend(request.param)


@pytest.fixture
def data_dir():
    return Path(__file__).resolve().parents[1] / "src" / "matchsign" / "data"


def pytest_configure(config):
    pytest.acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    lines = getattr(pytest, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
