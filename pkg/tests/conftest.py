import json

import pytest

from .strategies import FIXTURES


@pytest.fixture(scope="session")
def teletype_programs():
    return json.loads((FIXTURES / "teletype_programs.json").read_text(encoding="utf-8"))


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[number])
