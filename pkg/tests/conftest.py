import math

import pytest

from cousin_sieve.oracle import Oracle

_ACCEPTANCE = []


@pytest.fixture(scope="session")
def oracle_1e6():
    return Oracle.for_ranks(10**6)


@pytest.fixture(scope="session")
def factor_table():
    """Smallest-prime-factor table up to 10^5, built independently of the package."""
    n = 10**5
    spf = list(range(n + 1))
    for i in range(2, math.isqrt(n) + 1):
        if spf[i] == i:
            for j in range(i * i, n + 1, i):
                if spf[j] == j:
                    spf[j] = i
    return spf


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
