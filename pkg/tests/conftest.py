import numpy as np
import pytest

from xxzdiscord.linalg import SWAP

ACCEPTANCE_RESULTS = {}


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("acceptance")
    if crit is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        ACCEPTANCE_RESULTS[crit] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE_RESULTS, key=lambda c: int(c.split()[0])):
        outcome = ACCEPTANCE_RESULTS[crit]
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{mark}] criterion {crit}")


def ket(*amps):
    v = np.array(amps, dtype=complex)
    return v / np.linalg.norm(v)


def proj(v):
    return np.outer(v, v.conj())


@pytest.fixture
def singlet():
    return proj(ket(0, 1, -1, 0))


@pytest.fixture
def classical_pair():
    return 0.5 * (proj(ket(1, 0, 0, 0)) + proj(ket(0, 0, 0, 1)))


@pytest.fixture
def maximally_mixed():
    return np.eye(4, dtype=complex) / 4


def random_density(rng, dim=4, rank=None):
    """Hilbert-Schmidt (rank = dim) or lower-rank Ginibre density matrix."""
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_unitary(rng, dim):
    q, r = np.linalg.qr(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def swap_qubits(rho):
    return SWAP @ rho @ SWAP
