"""Two-particle momentum-spin states on a discrete momentum support.

Amplitudes are keyed by ``(label_a, label_b, lam_a, lam_b)`` where labels
index into the shared momentum list and ``lam = +1/-1`` is the mean-spin
projection on x3. Distinct labels are orthogonal momentum eigenstates, so
the partial trace over momentum is an exact finite sum.

The 4x4 spin density matrix uses the basis order (+,+), (+,-), (-,+), (-,-).
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .kinematics import BoostZ, DomainError, FourMomentum, boost_momentum, on_shell
from .wigner import wigner_block

SEPARATION_TOL = 1e-9
NORM_TOL = 1e-12

SPINS = (1, -1)
SPIN_INDEX = {1: 0, -1: 1}


def same_momentum(p: FourMomentum, q: FourMomentum, tol: float = SEPARATION_TOL) -> bool:
    """Componentwise comparison, each component relative to its own size (floored at m).

    Boosts leave the transverse components untouched, so momenta that are
    distinct before a boost stay distinct however large the longitudinal
    component grows.
    """
    if p.mass != q.mass:
        return False
    for a, b in zip(p.spatial, q.spatial):
        if abs(a - b) > tol * max(abs(a), abs(b), p.mass):
            return False
    return True


@dataclass(frozen=True)
class TwoParticleState:
    momenta: tuple[FourMomentum, ...]
    amplitudes: Mapping[tuple[int, int, int, int], complex]

    def __post_init__(self):
        object.__setattr__(self, "momenta", tuple(self.momenta))
        object.__setattr__(self, "amplitudes", MappingProxyType(dict(self.amplitudes)))
        n = len(self.momenta)
        for ia, ib, la, lb in self.amplitudes:
            if not (0 <= ia < n and 0 <= ib < n) or la not in SPIN_INDEX or lb not in SPIN_INDEX:
                raise DomainError(f"invalid amplitude key {(ia, ib, la, lb)!r}")
        if abs(self.norm() - 1.0) > NORM_TOL:
            raise DomainError(f"state is not normalized (norm {self.norm()!r})")

    def norm(self) -> float:
        return math.sqrt(sum(abs(a) ** 2 for a in self.amplitudes.values()))

    def pair_vectors(self) -> dict[tuple[int, int], np.ndarray]:
        """Spin amplitude 4-vector for each occupied momentum-label pair."""
        out: dict[tuple[int, int], np.ndarray] = {}
        for (ia, ib, la, lb), amp in self.amplitudes.items():
            vec = out.setdefault((ia, ib), np.zeros(4, dtype=complex))
            vec[2 * SPIN_INDEX[la] + SPIN_INDEX[lb]] += amp
        return out


def build_state(terms, normalize: bool = False) -> TwoParticleState:
    """Assemble a state from ``(p_a, p_b, lam_a, lam_b, amplitude)`` terms.

    Momenta that coincide within the separation tolerance share a label and
    their amplitudes add coherently.
    """
    momenta: list[FourMomentum] = []

    def label(p: FourMomentum) -> int:
        for i, q in enumerate(momenta):
            if same_momentum(p, q):
                return i
        momenta.append(p)
        return len(momenta) - 1

    amps: dict[tuple[int, int, int, int], complex] = defaultdict(complex)
    for pa, pb, la, lb, amp in terms:
        amps[(label(pa), label(pb), la, lb)] += complex(amp)
    if normalize:
        total = math.sqrt(sum(abs(a) ** 2 for a in amps.values()))
        if total == 0.0:
            raise DomainError("state has zero norm")
        amps = {k: a / total for k, a in amps.items()}
    return TwoParticleState(tuple(momenta), amps)


def product_state(pa: FourMomentum, pb: FourMomentum, spin: np.ndarray) -> TwoParticleState:
    """Single momentum pair carrying the 4-component spin vector ``spin``."""
    spin = np.asarray(spin, dtype=complex).reshape(4)
    terms = [
        (pa, pb, la, lb, spin[2 * SPIN_INDEX[la] + SPIN_INDEX[lb]])
        for la in SPINS
        for lb in SPINS
    ]
    return build_state(terms, normalize=True)


def bell_momentum_state(m: float, p: float, phi: float) -> TwoParticleState:
    """Two pairs (p1, -p1), (p2, -p2) in the x1x2 plane, each with spins (|++> + |-->).

    p1 lies along +x1 and p2 at azimuth ``phi``. At phi = 0 the pairs merge
    and the state is renormalized.
    """
    if not (m > 0):
        raise DomainError("mass must be positive")
    if not (p > 0):
        raise DomainError("momentum magnitude must be positive")
    if not (0.0 <= phi < 2 * math.pi):
        raise DomainError("phi must lie in [0, 2 pi)")
    p1 = on_shell(m, (p, 0.0, 0.0))
    p2 = on_shell(m, (p * math.cos(phi), p * math.sin(phi), 0.0))
    terms = []
    for pk in (p1, p2):
        minus = on_shell(m, -pk.spatial)
        terms.append((pk, minus, 1, 1, 0.5))
        terms.append((pk, minus, -1, -1, 0.5))
    return build_state(terms, normalize=True)


def boost_state(s: TwoParticleState, xi: float) -> TwoParticleState:
    """Relabel each momentum to its boosted value and rotate both spins by their Wigner blocks."""
    boost = BoostZ(float(xi))
    if boost.xi == 0.0:
        return s
    blocks = [wigner_block(p, boost.xi) for p in s.momenta]
    boosted = [boost_momentum(boost, p) for p in s.momenta]
    terms = []
    for (ia, ib), vec in s.pair_vectors().items():
        rot = np.kron(blocks[ia], blocks[ib]) @ vec
        for la in SPINS:
            for lb in SPINS:
                amp = rot[2 * SPIN_INDEX[la] + SPIN_INDEX[lb]]
                if amp != 0:
                    terms.append((boosted[ia], boosted[ib], la, lb, amp))
    return build_state(terms)


def reduce_over_momentum(s: TwoParticleState) -> np.ndarray:
    """Reduced two-qubit spin density matrix, tracing out the momentum labels."""
    rho = np.zeros((4, 4), dtype=complex)
    for vec in s.pair_vectors().values():
        rho += np.outer(vec, vec.conj())
    return rho


def density_matrix_errors(rho: np.ndarray) -> tuple[float, float, float]:
    """(hermiticity error, |trace - 1|, minimum eigenvalue) of ``rho``."""
    rho = np.asarray(rho)
    herm = float(np.max(np.abs(rho - rho.conj().T)))
    tr = float(abs(np.trace(rho) - 1.0))
    lmin = float(np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))))
    return herm, tr, lmin
