import time
from contextlib import contextmanager

import pytest

_criteria = {}


class CriterionReport:
    @contextmanager
    def __call__(self, number: int, title: str, budget_s: float):
        """Time a criterion, fail it if over budget, and record PASS/FAIL."""
        start = time.perf_counter()
        try:
            yield
            elapsed = time.perf_counter() - start
            assert elapsed < budget_s, f"criterion {number} took {elapsed:.2f}s (budget {budget_s}s)"
        except BaseException as exc:
            elapsed = time.perf_counter() - start
            _criteria[number] = ("FAIL", title, elapsed, str(exc).splitlines()[0] if str(exc) else type(exc).__name__)
            raise
        _criteria[number] = ("PASS", title, elapsed, "")


@pytest.fixture
def criterion():
    return CriterionReport()


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        status, title, elapsed, note = _criteria[number]
        line = f"[{status}] criterion {number}: {title} ({elapsed:.2f}s)"
        if note:
            line += f" -- {note}"
        terminalreporter.write_line(line)
