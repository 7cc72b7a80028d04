import itertools

import numpy as np
import pytest

from stardisc._accel import HAS_NUMBA

BACKENDS = ["numpy"] + (["numba"] if HAS_NUMBA else [])

_ACCEPTANCE_LINES = []


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def brute_dstar(coords):
    """Independent oracle: sup of |local discrepancy| over every corner of
    {coords_j} u {1}, with open and closed boxes counted directly."""
    X = np.asarray(coords, dtype=float)
    if X.ndim == 1:
        X = X[:, None]
    N, s = X.shape
    axes = [sorted(set(X[:, j].tolist()) | {1.0}) for j in range(s)]
    best = 0.0
    for q in itertools.product(*axes):
        vol = float(np.prod(q))
        n_open = sum(all(x[j] < q[j] for j in range(s)) for x in X)
        n_closed = sum(all(x[j] <= q[j] for j in range(s)) for x in X)
        best = max(best, vol - n_open / N, n_closed / N - vol)
    return best
