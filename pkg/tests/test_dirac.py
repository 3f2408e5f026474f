import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meanspin import dirac
from meanspin.dirac import ALPHA, BETA, I4, SIGMA
from meanspin.kinematics import DomainError, on_shell

momenta = st.builds(
    lambda m, a, b, c: on_shell(m, (a, b, c)),
    st.floats(0.1, 10.0),
    st.floats(-20.0, 20.0),
    st.floats(-20.0, 20.0),
    st.floats(-20.0, 20.0),
)


def comm(a, b):
    return a @ b - b @ a


def test_dirac_algebra():
    for i, j in itertools.product(range(3), repeat=2):
        np.testing.assert_array_equal(ALPHA[i] @ ALPHA[j] + ALPHA[j] @ ALPHA[i], 2 * (i == j) * I4)
    for a in ALPHA:
        np.testing.assert_array_equal(a @ BETA + BETA @ a, np.zeros((4, 4)))
    np.testing.assert_array_equal(BETA @ BETA, I4)


def test_sigma_from_alpha_cross_product():
    # sigma_k = (1/2i) (alpha x alpha)_k
    for k in range(3):
        i, j = (k + 1) % 3, (k + 2) % 3
        cross = ALPHA[i] @ ALPHA[j] - ALPHA[j] @ ALPHA[i]
        np.testing.assert_array_equal(cross / 2j, SIGMA[k])


def test_hamiltonian_at_rest():
    h = dirac.dirac_hamiltonian(on_shell(2.0, (0, 0, 0)))
    np.testing.assert_array_equal(h, 2.0 * BETA)


def test_hamiltonian_spectrum():
    h = dirac.dirac_hamiltonian(on_shell(1.0, (0, 0, 1)))
    np.testing.assert_allclose(np.linalg.eigvalsh(h), [-math.sqrt(2)] * 2 + [math.sqrt(2)] * 2, atol=1e-14)


@settings(max_examples=100)
@given(momenta)
def test_hamiltonian_square(p):
    h = dirac.dirac_hamiltonian(p)
    np.testing.assert_allclose(h @ h, p.energy**2 * I4, atol=1e-12 * p.energy**2)
    np.testing.assert_allclose(h, h.conj().T)


def test_spinor_boost_group():
    np.testing.assert_array_equal(dirac.spinor_boost(0.0), I4)
    for x1, x2 in [(0.3, 1.1), (-2.0, 0.5), (4.0, -4.0)]:
        np.testing.assert_allclose(dirac.spinor_boost(x1) @ dirac.spinor_boost(-x1), I4, atol=1e-12)
        np.testing.assert_allclose(
            dirac.spinor_boost(x1) @ dirac.spinor_boost(x2), dirac.spinor_boost(x1 + x2), atol=1e-12 * math.cosh(x1 + x2)
        )
    s = dirac.spinor_boost(0.7)
    np.testing.assert_allclose(s, s.conj().T)
    assert not np.allclose(s @ s.conj().T, I4)


def test_fw_unitary_at_rest():
    np.testing.assert_allclose(dirac.fw_unitary(on_shell(1.5, (0, 0, 0))), I4, atol=1e-15)


@settings(max_examples=200)
@given(momenta)
def test_fw_unitary_diagonalizes(p):
    u = dirac.fw_unitary(p)
    np.testing.assert_allclose(u @ u.conj().T, I4, atol=1e-12)
    e = p.energy
    np.testing.assert_allclose(
        u @ dirac.dirac_hamiltonian(p) @ u.conj().T, np.diag([e, e, -e, -e]), atol=1e-10 * max(e, 1)
    )


def test_mean_spin_at_rest():
    n = np.array([0.6, 0.0, 0.8])
    expected = 0.5 * (0.6 * SIGMA[0] + 0.8 * SIGMA[2])
    np.testing.assert_allclose(dirac.mean_spin(on_shell(1.0, (0, 0, 0)), n), expected, atol=1e-15)


def test_mean_spin_rejects_non_unit_axis():
    with pytest.raises(DomainError):
        dirac.mean_spin(on_shell(1.0, (0, 0, 0)), [1.0, 1.0, 0.0])


@settings(max_examples=100)
@given(momenta, st.floats(0, math.pi), st.floats(0, 2 * math.pi))
def test_mean_spin_properties(p, th, ph):
    n = np.array([math.sin(th) * math.cos(ph), math.sin(th) * math.sin(ph), math.cos(th)])
    s = dirac.mean_spin(p, n)
    h = dirac.dirac_hamiltonian(p)
    np.testing.assert_allclose(s, s.conj().T, atol=1e-12)
    np.testing.assert_allclose(np.linalg.eigvalsh(s), [-0.5, -0.5, 0.5, 0.5], atol=1e-12)
    np.testing.assert_allclose((2 * s) @ (2 * s), I4, atol=1e-12)
    np.testing.assert_allclose(comm(s, h), 0, atol=1e-12 * max(p.energy, 1))


@settings(max_examples=50)
@given(momenta)
def test_mean_spin_su2_algebra(p):
    s = [dirac.mean_spin(p, e) for e in np.eye(3)]
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        np.testing.assert_allclose(comm(s[i], s[j]), 1j * s[k], atol=1e-12)


def test_eigenspinor_at_rest():
    psi = dirac.fw_eigenspinor(on_shell(1.0, (0, 0, 0)), 1, 1)
    np.testing.assert_allclose(psi.spinor, [1, 0, 0, 0], atol=1e-15)


@settings(max_examples=100)
@given(momenta, st.sampled_from([1, -1]), st.sampled_from([1, -1]))
def test_eigenspinor_eigenvalues(p, lam, sign):
    psi = dirac.fw_eigenspinor(p, lam, sign).spinor
    e = p.energy
    np.testing.assert_allclose(dirac.dirac_hamiltonian(p) @ psi, sign * e * psi, atol=1e-12 * max(e, 1))
    sigma3 = 2 * dirac.mean_spin(p, [0, 0, 1])
    np.testing.assert_allclose(sigma3 @ psi, lam * psi, atol=1e-12)
    assert np.linalg.norm(psi) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=100)
@given(momenta, st.sampled_from([1, -1]))
def test_positive_eigenspinor_is_boosted_rest_spinor(p, lam):
    # sqrt(m/E) S(L(p)) psi(0, lam) is already unit-norm in this normalization
    rest = np.zeros(4, dtype=complex)
    rest[0 if lam == 1 else 1] = 1.0
    conventional = math.sqrt(p.mass / p.energy) * dirac.spinor_standard_boost(p) @ rest
    np.testing.assert_allclose(dirac.fw_eigenspinor(p, lam, 1).spinor, conventional, atol=1e-10)
