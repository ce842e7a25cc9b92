from __future__ import annotations

import os
import sys

from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")

import report  # noqa: E402


def pytest_terminal_summary(terminalreporter):
    if report.LINES:
        terminalreporter.section("acceptance criteria")
        for line in report.LINES:
            terminalreporter.write_line(line)
