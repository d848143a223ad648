import itertools

import numpy as np
import pytest


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2


def random_density(rng, n, rank=None):
    rank = rank or n
    g = rng.normal(size=(n, rank)) + 1j * rng.normal(size=(n, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


def max_entangled_projector(d=3):
    phi = np.zeros(d * d, dtype=complex)
    for i in range(d):
        phi[i * d + i] = 1 / np.sqrt(d)
    return np.outer(phi, phi.conj())


def swap_operator(d=3):
    s = np.zeros((d * d, d * d))
    for i, j in itertools.product(range(d), repeat=2):
        s[i * d + j, j * d + i] = 1
    return s


def realign_by_loops(rho, da, db):
    r = np.zeros((da * da, db * db), dtype=complex)
    for i, j, k, l in itertools.product(range(da), range(db), range(da), range(db)):
        r[i * da + k, j * db + l] = rho[i * db + j, k * db + l]
    return r


@pytest.fixture
def rng():
    return np.random.default_rng(20260101)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
