"""Transformation of FW eigenspinors under an x3 boost.

The matrix T maps FW eigenspinors at momentum p to FW eigenspinors at the
boosted momentum, S(L) psi(p, mu) = sum_nu T[nu, mu] psi(Lp, nu), with the
FW basis labels 0 = (+, +E), 1 = (-, +E), 2 = (+, -E), 3 = (-, -E).

Two independent routes are provided: the closed form built from the
coefficients A, B, C, D and the direct product U_FW(Lp) S(L) U_FW(p)^dagger.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import dirac
from .kinematics import BoostZ, DomainError, FourMomentum, SphericalMomentum, boost_momentum
from .kinematics import from_spherical, to_spherical


@dataclass(frozen=True)
class TransformCoefficients:
    A: float
    B: float
    C: float
    D: float
    A_tilde: float
    B_tilde: float
    energy: float
    boosted_energy: float


def _rapidity(xi) -> float:
    return BoostZ(float(xi)).xi


def _check_mass(m: float) -> float:
    m = float(m)
    if not (m > 0 and math.isfinite(m)):
        raise DomainError(f"mass must be positive and finite, got {m!r}")
    return m


def coefficients(m: float, sp: SphericalMomentum, xi: float) -> TransformCoefficients:
    """Evaluate A, B, C, D, A~, B~ and E' for mass ``m``, momentum ``sp``, rapidity ``xi``.

    A and E' are evaluated in light-cone form, where every term is
    non-negative. This is algebraically the same as the direct
    expressions but keeps A^2 + B^2 = 1 to rounding error for |xi| up to
    the rapidity limit and p/m over many decades.
    """
    m = _check_mass(m)
    xi = _rapidity(xi)
    p, theta, phi = sp.p, sp.theta, sp.phi
    p3 = p * math.cos(theta)
    pt = p * math.sin(theta)
    e = math.sqrt(m * m + p * p)

    mt2 = m * m + pt * pt
    if p3 >= 0:
        plus = e + p3
        minus = mt2 / plus
    else:
        minus = e - p3
        plus = mt2 / minus
    hp, hm = math.exp(xi / 2), math.exp(-xi / 2)
    e_b = 0.5 * (plus * hp * hp + minus * hm * hm)

    me, meb = m + e, m + e_b
    root = math.sqrt(me) * math.sqrt(meb)
    ch, sh = math.cosh(xi / 2), math.sinh(xi / 2)

    # (m + E) cosh(xi/2) + p3 sinh(xi/2)
    k = 0.5 * ((m + plus) * hp + (m + minus) * hm)
    a = k / root
    b = pt * sh / root
    c = sh / (e_b * root) * (ch * ch * (me * me - p * p * math.cos(2 * phi)) + m * p * math.cos(phi) * math.sinh(xi))
    d = -p * math.sin(phi) * math.sinh(xi) / (e_b * root) * (e * sh + p * math.cos(phi) * ch)
    ratio = e / e_b
    return TransformCoefficients(a, b, c, d, ratio * a, ratio * b, e, e_b)


def transform_closed_form(m: float, sp: SphericalMomentum, xi: float) -> np.ndarray:
    """Full 4x4 transformation matrix, including the sqrt(E'/E) prefactor."""
    co = coefficients(m, sp, xi)
    em, ep = cmath.exp(-1j * sp.phi), cmath.exp(1j * sp.phi)
    mat = np.array(
        [
            [co.A, co.B * em, co.C, co.D * em],
            [-co.B * ep, co.A, co.D * ep, -co.C],
            [0, 0, co.A_tilde, co.B_tilde * em],
            [0, 0, -co.B_tilde * ep, co.A_tilde],
        ],
        dtype=complex,
    )
    return math.sqrt(co.boosted_energy / co.energy) * mat


def transform_operator_product(m: float, sp: SphericalMomentum, xi: float) -> np.ndarray:
    """U_FW(Lp) S(L) U_FW(p)^dagger evaluated as a plain matrix product."""
    p = from_spherical(_check_mass(m), sp)
    boost = BoostZ(float(xi))
    lp = boost_momentum(boost, p)
    return dirac.fw_unitary(lp) @ dirac.spinor_boost(boost) @ dirac.fw_unitary(p).conj().T


def positive_block(m: float, sp: SphericalMomentum, xi: float) -> np.ndarray:
    """SU(2) Wigner rotation on the positive-energy mean-spin labels.

    The sqrt(E'/E) measure factor of the full matrix is stripped, so the
    result is exactly [[A, B e^{-i phi}], [-B e^{i phi}, A]].
    """
    co = coefficients(m, sp, xi)
    em, ep = cmath.exp(-1j * sp.phi), cmath.exp(1j * sp.phi)
    return np.array([[co.A, co.B * em], [-co.B * ep, co.A]], dtype=complex)


def wigner_block(p: FourMomentum, xi: float) -> np.ndarray:
    """positive_block for a Cartesian four-momentum."""
    return positive_block(p.mass, to_spherical(p), xi)


def block_deviation(m: float, sp: SphericalMomentum, xi: float) -> float:
    """Largest elementwise gap between the two routes on the positive-energy block."""
    closed = transform_closed_form(m, sp, xi)[:2, :2]
    product = transform_operator_product(m, sp, xi)[:2, :2]
    return float(np.max(np.abs(closed - product)))
