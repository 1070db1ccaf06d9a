import numpy as np
import pytest

from degreal.core import IntervalSequence


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_box(rng, n, max_width=None):
    """Uniform random valid box; width capped when given."""
    a = rng.integers(0, n, size=n)
    if max_width is None:
        b = np.array([rng.integers(x, n) for x in a], dtype=np.int64)
    else:
        b = np.minimum(a + rng.integers(0, max_width + 1, size=n), n - 1)
    return IntervalSequence(a, b)


def pairwise_spread(d):
    d = [int(v) for v in d]
    return sum(abs(x - y) for i, x in enumerate(d) for y in d[i + 1 :])


def naive_xy(d):
    d = sorted((int(v) for v in d), reverse=True)
    n = len(d)
    X = [sum(d[:k]) for k in range(n + 1)]
    Y = [k * (k - 1) + sum(min(v, k) for v in d[k:]) for k in range(n + 1)]
    return X, Y


ACCEPTANCE = {}


def record(number, ok, detail):
    """Remember one acceptance verdict; printed in the terminal summary."""
    ACCEPTANCE[number] = (bool(ok), detail)
    print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'} - {detail}")
