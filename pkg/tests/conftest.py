import itertools
import sys

import numpy as np
import pytest
from scipy.stats import unitary_group


def haar(n, rng):
    if n == 1:
        return np.exp(2j * np.pi * rng.random((1, 1)))
    return unitary_group.rvs(n, random_state=rng)


def sorted_tuples(lo, hi, max_len, min_len=1):
    """All weakly decreasing tuples with entries in [lo, hi]."""
    for k in range(min_len, max_len + 1):
        for t in itertools.combinations_with_replacement(range(hi, lo - 1, -1), k):
            yield t


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    RESULTS = getattr(mod, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, title, detail = RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:2d}. {title}: {detail}")
