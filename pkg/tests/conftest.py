import time

import pytest

_LINES = []


class Criterion:
    """Times a block against a limit and records one pass/fail line."""

    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.elapsed = time.perf_counter() - self.start
        ok = exc_type is None and self.elapsed < self.limit
        line = (f"criterion {self.number:2d}: {'PASS' if ok else 'FAIL'}  "
                f"{self.elapsed:6.2f}s (limit {self.limit:g}s)  {self.title}")
        _LINES.append(line)
        print(line)
        if exc_type is None:
            assert self.elapsed < self.limit, line
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(_LINES):
            terminalreporter.write_line(line)
