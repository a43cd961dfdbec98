"""Shared pytest configuration.

Acceptance tests record a one-line verdict per criterion through the
``acceptance`` fixture; the lines are printed in the terminal summary.
"""
import pytest

_LINES = {}


class _Recorder:
    def record(self, key, passed, detail):
        _LINES[key] = f"{'PASS' if passed else 'FAIL'}  criterion {key}: {detail}"


@pytest.fixture
def acceptance():
    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_LINES):
        terminalreporter.write_line(_LINES[key])
