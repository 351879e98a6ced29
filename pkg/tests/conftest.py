import numpy as np
import pytest
from scipy.linalg import expm

from macroreal import Spin


def ladder(twice_j):
    """Dense J_x and J_y in the ascending J_z basis, built from J+."""
    j = twice_j / 2
    m = np.arange(-twice_j, twice_j + 1, 2) / 2
    jp = np.diag(np.sqrt(j * (j + 1) - m[:-1] * (m[:-1] + 1)), -1)
    return (jp + jp.T) / 2, (jp - jp.T) / 2j


def expm_sq(twice_j, theta, axis="x"):
    """Brute-force |exp(-i theta J_axis)|**2 by matrix exponential."""
    jx, jy = ladder(twice_j)
    gen = jx if axis == "x" else jy
    return np.abs(expm(-1j * theta * gen)) ** 2


@pytest.fixture
def half():
    return Spin(1)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
