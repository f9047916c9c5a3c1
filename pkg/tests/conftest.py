import numpy as np
import pytest
from hypothesis import settings

from qutrit_phase.numerics import SeededSampler

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


@pytest.fixture
def sampler():
    return SeededSampler(20240601)


def random_amplitudes(rng, count):
    z = rng.standard_normal((count, 3)) + 1j * rng.standard_normal((count, 3))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
