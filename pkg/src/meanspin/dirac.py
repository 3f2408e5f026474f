"""Dirac matrices (standard representation), spinor boosts and the FW transformation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .kinematics import BoostZ, DomainError, FourMomentum

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)

BETA = np.block([[I2, _Z2], [_Z2, -I2]])
ALPHA = tuple(np.block([[_Z2, s], [s, _Z2]]) for s in PAULI)
# block-diagonal Pauli matrices, sigma_k = (1/2i) (alpha x alpha)_k
SIGMA = tuple(np.block([[s, _Z2], [_Z2, s]]) for s in PAULI)

# Sign in S(xi) = cosh(xi/2) + s sinh(xi/2) alpha_3.  Fixed by agreement of
# U_FW(Lp) S U_FW(p)^dagger with the closed-form transformation matrix; see
# tests/test_wigner.py::test_spinor_boost_sign_regression.
BOOST_SIGN = 1


@dataclass(frozen=True)
class SpinorAmplitude:
    """Unit-norm 4-spinor attached to a momentum and an energy sign."""

    spinor: np.ndarray
    momentum: FourMomentum
    sign: int


def _alpha_dot(v) -> np.ndarray:
    return v[0] * ALPHA[0] + v[1] * ALPHA[1] + v[2] * ALPHA[2]


def dirac_hamiltonian(p: FourMomentum) -> np.ndarray:
    """Free Dirac Hamiltonian beta m + alpha.p at fixed momentum."""
    return p.mass * BETA + _alpha_dot(p.spatial)


def spinor_boost(b) -> np.ndarray:
    """Spinor representation S of the x3 boost; Hermitian, not unitary."""
    xi = b.xi if isinstance(b, BoostZ) else BoostZ(float(b)).xi
    return math.cosh(xi / 2) * I4 + BOOST_SIGN * math.sinh(xi / 2) * ALPHA[2]


def spinor_standard_boost(p: FourMomentum) -> np.ndarray:
    """S(L(p)) for the pure boost taking the rest frame to ``p``."""
    m, e, mag = p.mass, p.energy, p.magnitude
    if mag == 0.0:
        return I4.copy()
    ch = math.sqrt((e + m) / (2 * m))
    sh = mag / math.sqrt(2 * m * (e + m))
    return ch * I4 + BOOST_SIGN * sh * _alpha_dot(p.spatial / mag)


def fw_unitary(p: FourMomentum) -> np.ndarray:
    """Foldy-Wouthuysen unitary (m + beta alpha.p + E) / sqrt(2E(E + m))."""
    m, e = p.mass, p.energy
    num = (m + e) * I4 + BETA @ _alpha_dot(p.spatial)
    return num / math.sqrt(2 * e * (e + m))


def mean_spin(p: FourMomentum, axis) -> np.ndarray:
    """Mean spin component (1/2) Sigma.n = U^dagger (1/2 sigma.n) U."""
    n = np.asarray(axis, dtype=float)
    if n.shape != (3,) or abs(np.linalg.norm(n) - 1.0) > 1e-12:
        raise DomainError("spin axis must be a unit 3-vector")
    u = fw_unitary(p)
    sig = n[0] * SIGMA[0] + n[1] * SIGMA[1] + n[2] * SIGMA[2]
    return 0.5 * (u.conj().T @ sig @ u)


def fw_eigenspinor(p: FourMomentum, lam: int, sign: int) -> SpinorAmplitude:
    """Simultaneous eigenspinor of H_D (eigenvalue sign*E) and Sigma_3 (eigenvalue lam).

    Column of U_FW(p)^dagger selected by the FW basis label
    0 = (+, +E), 1 = (-, +E), 2 = (+, -E), 3 = (-, -E).
    """
    if lam not in (1, -1) or sign not in (1, -1):
        raise DomainError("lam and sign must each be +1 or -1")
    mu = (0 if lam == 1 else 1) + (0 if sign == 1 else 2)
    col = fw_unitary(p).conj().T[:, mu].copy()
    return SpinorAmplitude(col, p, sign)
