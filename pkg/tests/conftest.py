import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def match_multisets(first, second, tol):
    """Greedy nearest matching of two complex multisets within tol."""
    first = list(first)
    second = list(second)
    if len(first) != len(second):
        return False
    for a in first:
        best_i, best_d = -1, tol
        for i, b in enumerate(second):
            d = abs(a - b)
            if d <= best_d:
                best_i, best_d = i, d
        if best_i < 0:
            return False
        second.pop(best_i)
    return True
