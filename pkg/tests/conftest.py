import numpy as np
import pytest

from sopfr.factor_core import sopf_block, sopfr_block


@pytest.fixture(scope="session")
def sopfr_1e6():
    """sopfr(n) for n = 0..10**6 (index 0 padded with 0)."""
    return np.concatenate(([0], sopfr_block(1, 10**6)))


@pytest.fixture(scope="session")
def sopf_1e6():
    return np.concatenate(([0], sopf_block(1, 10**6)))


@pytest.fixture(scope="session")
def is_prime_1e6():
    # independent plain Eratosthenes over a bool array
    mark = np.ones(10**6 + 1, dtype=bool)
    mark[:2] = False
    for p in range(2, 1001):
        if mark[p]:
            mark[p * p :: p] = False
    return mark


_CRITERIA: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    num = getattr(report, "criterion", None)
    if num is not None:
        _CRITERIA.setdefault(num[0], [num[1], True])
        if report.outcome == "failed":
            _CRITERIA[num[0]][1] = False


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        title, ok = _CRITERIA[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {title}")
