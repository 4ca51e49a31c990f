import sys

import pytest

import coinvariant.linalg as _linalg
from coinvariant.cli import read_complex

# verify rank-nullity and M v = 0 on every kernel computation
_linalg.SELF_CHECK = True


@pytest.fixture(scope="session")
def sigma():
    return read_complex("rp2.json")


@pytest.fixture(scope="session")
def lam():
    return read_complex("pinched_torus.json")


@pytest.fixture(scope="session")
def gamma():
    return read_complex("gamma.json")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
