import random

import pytest


def eea(a, b):
    """Recursive extended Euclid, independent of the library's iterative loop."""
    if b == 0:
        return a, 1, 0
    g, x, y = eea(b, a % b)
    return g, y, x - (a // b) * y


@pytest.fixture
def rng():
    return random.Random(20181)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, name, seconds = RESULTS[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {name} ({seconds:.2f}s)")
