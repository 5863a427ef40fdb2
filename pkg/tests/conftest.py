import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import FROZEN  # noqa: E402

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def frozen():
    return json.loads(FROZEN.read_text())


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
