import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from invgroupoid.tables import FiniteMagma, parse_structure  # noqa: E402

Z3_TEXT = """\
elements: a b c
table:
a b c
b c a
c a b
"""

# (aa)a = ba = a but a(aa) = ab = b
NONASSOC_TEXT = """\
elements: a b
table:
b b
a a
"""


def magma(rows, names=None):
    rows = np.asarray(rows)
    names = names or tuple("abcdefgh"[: len(rows)])
    return FiniteMagma(tuple(names), rows)


@pytest.fixture
def z3():
    return parse_structure(Z3_TEXT)


@pytest.fixture
def left_zero():
    return magma([[0, 0], [1, 1]])


@pytest.fixture
def nonassoc():
    return parse_structure(NONASSOC_TEXT)


@pytest.fixture
def semilattice():
    # e^2 = e, f^2 = f, ef = fe = f
    return magma([[0, 1], [1, 1]], ("e", "f"))


@pytest.fixture
def zero_e():
    # {0, e}: 0 absorbing, e^2 = e
    return magma([[0, 0], [0, 1]], ("0", "e"))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number])
