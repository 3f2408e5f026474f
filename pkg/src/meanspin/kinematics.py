"""On-shell four-momenta and boosts along the x3 axis.

Natural units (c = hbar = 1); metric signature (+, -, -, -).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

# cosh overflows near 710; the physics saturates long before this
MAX_RAPIDITY = 300.0


class DomainError(ValueError):
    """Raised when an input lies outside the domain of an operation."""


@dataclass(frozen=True)
class FourMomentum:
    """Energy-momentum of a massive particle; the energy is always derived."""

    mass: float
    p1: float
    p2: float
    p3: float

    def __post_init__(self):
        if not (self.mass > 0 and math.isfinite(self.mass)):
            raise DomainError(f"mass must be positive and finite, got {self.mass!r}")
        for comp in (self.p1, self.p2, self.p3):
            if not math.isfinite(comp):
                raise DomainError("momentum components must be finite")

    @property
    def energy(self) -> float:
        return math.sqrt(self.mass**2 + self.p1**2 + self.p2**2 + self.p3**2)

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.p1, self.p2, self.p3])

    @property
    def magnitude(self) -> float:
        return math.sqrt(self.p1**2 + self.p2**2 + self.p3**2)

    @property
    def transverse_mass(self) -> float:
        return math.sqrt(self.mass**2 + self.p1**2 + self.p2**2)

    def vector(self) -> np.ndarray:
        """Contravariant components (E, p1, p2, p3)."""
        return np.array([self.energy, self.p1, self.p2, self.p3])

    def light_cone(self) -> tuple[float, float]:
        """Return (E + p3, E - p3), both evaluated without cancellation."""
        e = self.energy
        mt2 = self.mass**2 + self.p1**2 + self.p2**2
        if self.p3 >= 0:
            plus = e + self.p3
            return plus, mt2 / plus
        minus = e - self.p3
        return mt2 / minus, minus


@dataclass(frozen=True)
class SphericalMomentum:
    """Spatial momentum as magnitude, polar angle from +x3, azimuth from +x1."""

    p: float
    theta: float
    phi: float

    def __post_init__(self):
        if not (self.p >= 0 and math.isfinite(self.p)):
            raise DomainError(f"momentum magnitude must be finite and >= 0, got {self.p!r}")
        if not (0.0 <= self.theta <= math.pi):
            raise DomainError(f"polar angle must lie in [0, pi], got {self.theta!r}")
        if not math.isfinite(self.phi):
            raise DomainError("azimuth must be finite")

    def cartesian(self) -> np.ndarray:
        st = math.sin(self.theta)
        return self.p * np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)]
        )

    @classmethod
    def from_cartesian(cls, p) -> "SphericalMomentum":
        p1, p2, p3 = (float(x) for x in p)
        mag = math.sqrt(p1 * p1 + p2 * p2 + p3 * p3)
        if mag == 0.0:
            return cls(0.0, 0.0, 0.0)
        theta = math.atan2(math.hypot(p1, p2), p3)
        phi = math.atan2(p2, p1) % (2 * math.pi)
        return cls(mag, theta, phi)


@dataclass(frozen=True)
class BoostZ:
    """Pure boost along +x3 with rapidity ``xi`` (velocity tanh xi)."""

    xi: float

    def __post_init__(self):
        if not math.isfinite(self.xi):
            raise DomainError("rapidity must be finite")
        if abs(self.xi) > MAX_RAPIDITY:
            raise DomainError(f"|rapidity| must not exceed {MAX_RAPIDITY}, got {self.xi!r}")

    def matrix(self) -> np.ndarray:
        """Vector representation acting on (E, p1, p2, p3)."""
        ch, sh = math.cosh(self.xi), math.sinh(self.xi)
        lam = np.eye(4)
        lam[0, 0] = lam[3, 3] = ch
        lam[0, 3] = lam[3, 0] = sh
        return lam


def on_shell(m: float, p) -> FourMomentum:
    """Build the on-shell four-momentum of mass ``m`` and spatial momentum ``p``."""
    p1, p2, p3 = (float(x) for x in p)
    return FourMomentum(float(m), p1, p2, p3)


def from_spherical(m: float, sp: SphericalMomentum) -> FourMomentum:
    return on_shell(m, sp.cartesian())


def to_spherical(p: FourMomentum) -> SphericalMomentum:
    return SphericalMomentum.from_cartesian(p.spatial)


def _as_boost(b) -> BoostZ:
    return b if isinstance(b, BoostZ) else BoostZ(float(b))


def boosted_energy(b, p: FourMomentum) -> float:
    """E' = E cosh(xi) + p3 sinh(xi), computed from light-cone components.

    Both terms of the light-cone form are non-negative, so the result keeps
    full relative precision even when E cosh(xi) and p3 sinh(xi) nearly cancel.
    """
    xi = _as_boost(b).xi
    plus, minus = p.light_cone()
    return 0.5 * (plus * math.exp(xi) + minus * math.exp(-xi))


def boost_momentum(b, p: FourMomentum) -> FourMomentum:
    """Apply the x3 boost: p3' = E sinh(xi) + p3 cosh(xi), transverse unchanged.

    Evaluated as p3' = m_T sinh(y + xi) with y the longitudinal rapidity of
    ``p``; this is algebraically identical and stable for large |xi|.
    """
    xi = _as_boost(b).xi
    if xi == 0.0:
        return p
    mt = p.transverse_mass
    y = math.asinh(p.p3 / mt)
    return FourMomentum(p.mass, p.p1, p.p2, mt * math.sinh(y + xi))


def standard_boost(p: FourMomentum) -> np.ndarray:
    """Pure boost L(p) taking the rest momentum (m, 0, 0, 0) to ``p``."""
    m, e = p.mass, p.energy
    v = p.spatial
    lam = np.empty((4, 4))
    lam[0, 0] = e / m
    lam[0, 1:] = lam[1:, 0] = v / m
    lam[1:, 1:] = np.eye(3) + np.outer(v, v) / (m * (m + e))
    return lam
