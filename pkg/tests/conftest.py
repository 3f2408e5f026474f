import numpy as np
import pytest

from meanspin import states

HERM_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = -1e-10


def assert_density_matrix(rho):
    herm, tr, lmin = states.density_matrix_errors(rho)
    assert herm < HERM_TOL, f"not Hermitian: {herm}"
    assert tr < TRACE_TOL, f"trace off by {tr}"
    assert lmin > PSD_TOL, f"negative eigenvalue {lmin}"


@pytest.fixture(autouse=True)
def checked_reductions(monkeypatch):
    """Every reduced spin matrix produced during a test must be a valid density matrix."""
    produced = []
    original = states.reduce_over_momentum

    def recording(s):
        rho = original(s)
        produced.append(rho)
        return rho

    monkeypatch.setattr(states, "reduce_over_momentum", recording)
    yield produced
    for rho in produced:
        assert_density_matrix(rho)


def random_su2(rng):
    q = rng.normal(size=4)
    a, b, c, d = q / np.linalg.norm(q)
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


def random_density_matrix(rng, rank=None):
    k = rank if rank is not None else int(rng.integers(1, 5))
    g = rng.normal(size=(4, k)) + 1j * rng.normal(size=(4, k))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_ket(rng):
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    return v / np.linalg.norm(v)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(RESULTS):
        ok, detail = RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
