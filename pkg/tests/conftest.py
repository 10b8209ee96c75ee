import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from padictile import Word, worked_example_homeo  # noqa: E402

_criteria = {}


class _Criterion:
    def __init__(self, node, number, title, limit):
        self.node, self.number, self.title, self.limit = node, number, title, limit
        self.elapsed = None

    def __enter__(self):
        self.node._criterion = self.number
        _criteria[self.number] = (self.title, None, self.limit, "FAIL")
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        _criteria[self.number] = (self.title, self.elapsed, self.limit, "FAIL")
        return False

    def check_time(self):
        assert self.elapsed < self.limit, f"took {self.elapsed:.3f}s, limit {self.limit}s"


@pytest.fixture
def criterion(request):
    """Time one acceptance criterion and record it for the end-of-run summary."""

    def make(number, title, limit):
        return _Criterion(request.node, number, title, limit)

    return make


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    number = getattr(item, "_criterion", None)
    if number is not None and rep.when == "call":
        title, seconds, limit, _ = _criteria[number]
        _criteria[number] = (title, seconds, limit, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, seconds, limit, status = _criteria[number]
        timing = f"{seconds:.3f}s (limit {limit}s)" if seconds is not None else ""
        terminalreporter.write_line(f"AC{number:02d} {status:4s} {title} {timing}")


@pytest.fixture(scope="session")
def h35():
    return worked_example_homeo()


@pytest.fixture
def example_input():
    return Word(3, (2, 1, 0, 1, 0, 2, 0, 0, 0, 0, 0, 1, 0, 0))


def W(base, *digits):
    return Word(base, tuple(digits))
