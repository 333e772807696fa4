import math

import numpy as np
import pytest

from giantnode.core import NodeParams

ACCEPTANCE_LINES = []


def random_params(rng, gamma=False, markov=True):
    return NodeParams(
        g=tuple(rng.uniform(0.1, 1.5, 4)),
        theta=tuple(rng.uniform(0, 2 * math.pi, 4)),
        omega=rng.uniform(0, 10),
        alpha=rng.uniform(0, 2 * math.pi),
        gamma_e=tuple(rng.uniform(0, 1, 2)) if gamma else (0.0, 0.0),
        phi=tuple(rng.uniform(0, 2 * math.pi, 2)),
        delta=rng.uniform(-10, 10),
        tau=(0.0, 0.0) if markov else tuple(rng.uniform(0, 0.5, 2)),
    )


def random_symmetric(rng, gamma=False):
    g = rng.uniform(0.3, 1.5) if gamma else 1.0
    return NodeParams.symmetric(
        rng.uniform(0, 2 * math.pi), rng.uniform(0, 10), rng.uniform(0, 2 * math.pi),
        rng.uniform(-10, 10), tuple(rng.uniform(0, 1, 2)) if gamma else (0.0, 0.0),
        g0=g, theta1=rng.uniform(0, 2 * math.pi))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
