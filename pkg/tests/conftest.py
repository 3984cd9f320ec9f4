import numpy as np
import pytest
from scipy import stats

from pwmix.data import Dataset
from pwmix.mechanisms import MixtureParams

# Workhorse parameter sets: the two simulation presets plus assorted shapes.
PRESET_A = MixtureParams(epsilon=0.2, ratio=5.0, break_point=5.0)
PRESET_B = MixtureParams(epsilon=0.1, ratio=10.0, break_point=6.0)

PARAM_GRID = [
    MixtureParams(epsilon=eps, ratio=r, break_point=ct)
    for eps in (0.05, 0.1, 0.2, 0.5, 1.0)
    for r in (1.0, 2.0, 5.0)
    for ct in (1.0, 4.0, 10.0)
]

INT_PARAM_GRID = [p for p in PARAM_GRID if p.break_point == int(p.break_point)]


@pytest.fixture
def preset_a():
    return PRESET_A


@pytest.fixture
def preset_b():
    return PRESET_B


def make_synthetic_dataset(rows: int = 1000, seed: int = 123) -> Dataset:
    """Deterministic categorical dataset for audit and release tests."""
    rng = np.random.default_rng(seed)
    levels = {
        "color": ["red", "green", "blue", "gray"],
        "shape": ["circle", "square", "tri"],
        "size": ["s", "m", "l"],
        "region": ["n", "e", "s", "w", "c"],
    }
    attrs = tuple(levels)
    records = tuple(
        tuple(levels[a][rng.integers(0, len(levels[a]))] for a in attrs) for _ in range(rows)
    )
    return Dataset(schema=attrs, records=records)


@pytest.fixture(scope="session")
def synthetic_dataset():
    return make_synthetic_dataset()


# Verdict lines recorded by the acceptance tests; echoed after the run so
# they are visible even without -s.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def chi_square_pvalue(draws, pmf, cdf, lo, hi):
    """Chi-square GoF of integer draws against an exact mass function.

    Cells outside [lo, hi] are pooled into two tail cells; cells with
    expectation below 5 are folded together.
    """
    n = draws.size
    obs = [np.sum(draws < lo)]
    expected = [cdf(lo - 1) * n]
    for k in range(lo, hi + 1):
        obs.append(np.sum(draws == k))
        expected.append(pmf(k) * n)
    obs.append(np.sum(draws > hi))
    expected.append((1 - cdf(hi)) * n)
    obs, expected = np.asarray(obs, dtype=float), np.asarray(expected, dtype=float)
    keep = expected >= 5
    obs = np.append(obs[keep], obs[~keep].sum())
    expected = np.append(expected[keep], expected[~keep].sum())
    if expected[-1] < 1e-9:
        obs, expected = obs[:-1], expected[:-1]
    expected *= obs.sum() / expected.sum()
    return stats.chisquare(obs, expected).pvalue
