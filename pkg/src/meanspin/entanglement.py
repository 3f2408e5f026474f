"""Two-qubit entanglement measures: Wootters concurrence and the CHSH Bell parameter.

Spin observables are the +-1 valued sigma.a on the mean-spin labels, so the
classical CHSH bound is 2 and the Tsirelson bound is 2 sqrt(2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dirac import PAULI
from .kinematics import DomainError

SIGMA_Y2 = np.kron(PAULI[1], PAULI[1])
EIG_CLIP = 1e-10
RHO_TOL = 1e-9


def _ket(v) -> np.ndarray:
    return np.asarray(v, dtype=complex) / math.sqrt(2)


PHI_PLUS = _ket([1, 0, 0, 1])
PHI_MINUS = _ket([1, 0, 0, -1])
PSI_PLUS = _ket([0, 1, 1, 0])
PSI_MINUS = _ket([0, 1, -1, 0])


def projector(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


# equal mixture reached by the perpendicular-momentum Bell state under an extreme boost
PERPENDICULAR_LIMIT = 0.5 * projector(PSI_MINUS) + 0.5 * projector(PHI_PLUS)

REFERENCE_STATES = {
    "phi_plus": projector(PHI_PLUS),
    "phi_minus": projector(PHI_MINUS),
    "psi_plus": projector(PSI_PLUS),
    "psi_minus": projector(PSI_MINUS),
    "half_psi_minus_half_phi_plus": PERPENDICULAR_LIMIT,
    "maximally_mixed": np.eye(4, dtype=complex) / 4,
}


@dataclass(frozen=True)
class BellSetting:
    a1: np.ndarray
    a2: np.ndarray
    b1: np.ndarray
    b2: np.ndarray

    def __post_init__(self):
        for name in ("a1", "a2", "b1", "b2"):
            v = np.asarray(getattr(self, name), dtype=float)
            if v.shape != (3,) or abs(np.linalg.norm(v) - 1.0) > 1e-12:
                raise DomainError(f"{name} must be a unit 3-vector")
            object.__setattr__(self, name, v)


def check_density_matrix(rho, tol: float = RHO_TOL) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise DomainError(f"expected a 4x4 density matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > tol:
        raise DomainError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > tol:
        raise DomainError("density matrix does not have unit trace")
    return rho


def wootters_lambdas(rho) -> np.ndarray:
    """Square roots of the eigenvalues of rho rho~, sorted descending.

    Evaluated as the singular values of W^T (sigma_y x sigma_y) W with
    rho = W W^dagger truncated to its numerical rank. This equals the
    eigenvalue route, but the square-root step never touches eigenvalues
    that are zero up to rounding, where sqrt would turn 1e-17 noise into
    a 1e-9 error.
    """
    d, v = np.linalg.eigh(np.asarray(rho, dtype=complex))
    keep = d > 4 * np.finfo(float).eps * max(d.max(), 0.0)
    w = v[:, keep] * np.sqrt(d[keep])
    sv = np.linalg.svd(w.T @ SIGMA_Y2 @ w, compute_uv=False)
    return np.concatenate([np.sort(sv)[::-1], np.zeros(4 - sv.size)])


def wootters_lambdas_eig(rho) -> np.ndarray:
    """Same quantity from a general eigensolver on rho rho~ (non-Hermitian product)."""
    rho = np.asarray(rho, dtype=complex)
    rho_tilde = SIGMA_Y2 @ rho.conj() @ SIGMA_Y2
    ev = np.linalg.eigvals(rho @ rho_tilde).real
    ev = np.where((ev < 0) & (ev > -EIG_CLIP), 0.0, ev)
    if np.any(ev < 0):
        raise DomainError(f"rho rho~ has a negative eigenvalue {ev.min()!r}; input is not PSD")
    return np.sort(np.sqrt(ev))[::-1]


def concurrence(rho) -> float:
    """Wootters concurrence max(l1 - l2 - l3 - l4, 0)."""
    rho = check_density_matrix(rho)
    if np.linalg.eigvalsh(rho).min() < -EIG_CLIP:
        raise DomainError("density matrix is not positive semidefinite")
    lam = wootters_lambdas(rho)
    return float(min(max(lam[0] - lam[1] - lam[2] - lam[3], 0.0), 1.0))


def pure_state_concurrence(psi) -> float:
    """2 |a00 a11 - a01 a10| for a normalized two-qubit ket."""
    a = np.asarray(psi, dtype=complex).reshape(4)
    return float(2 * abs(a[0] * a[3] - a[1] * a[2]))


def _observable(n) -> np.ndarray:
    return n[0] * PAULI[0] + n[1] * PAULI[1] + n[2] * PAULI[2]


def spin_correlation(rho, a, b) -> float:
    """Tr[(sigma.a x sigma.b) rho]."""
    op = np.kron(_observable(a), _observable(b))
    return float(np.trace(op @ np.asarray(rho)).real)


def correlation_matrix(rho) -> np.ndarray:
    """T[i, j] = Tr[rho (sigma_i x sigma_j)]."""
    rho = np.asarray(rho)
    return np.array(
        [[np.trace(rho @ np.kron(si, sj)).real for sj in PAULI] for si in PAULI]
    )


def bell_parameter(rho, s: BellSetting) -> float:
    c = lambda a, b: spin_correlation(rho, a, b)
    return abs(c(s.a1, s.b1) + c(s.a1, s.b2) + c(s.a2, s.b1) - c(s.a2, s.b2))


def bell_max_oracle(rho) -> float:
    """Horodecki value 2 sqrt(u1 + u2) from the two largest eigenvalues of T^T T."""
    t = correlation_matrix(check_density_matrix(rho))
    u = np.sort(np.linalg.eigvalsh(t.T @ t))[::-1]
    return float(2 * math.sqrt(max(u[0] + u[1], 0.0)))


def _normalize_rows(v: np.ndarray) -> np.ndarray:
    n = np.linalg.norm(v, axis=-1, keepdims=True)
    # a vanishing block update leaves that direction unchanged
    return np.divide(v, n, out=np.zeros_like(v), where=n > 0)


def bell_max_optimize(
    rho,
    n_starts: int = 32,
    seed: int | np.random.Generator | None = 0,
    tol: float = 1e-10,
    max_iter: int = 20000,
) -> tuple[float, BellSetting]:
    """Maximize the CHSH parameter over the four measurement directions.

    Multi-start block-coordinate ascent: each of a1, a2, b1, b2 in turn is
    set to the direction maximizing the CHSH sum with the other three held
    fixed (the sum is linear in each direction). Every update is an exact
    1-block maximization, so the objective never decreases. All starts are
    iterated together and stop once no start improves by more than ``tol``.
    """
    rho = check_density_matrix(rho)
    t = correlation_matrix(rho)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)

    # random directions from uniform spherical angles
    th = np.arccos(rng.uniform(-1.0, 1.0, size=(4, n_starts)))
    ph = rng.uniform(0.0, 2 * np.pi, size=(4, n_starts))
    dirs = np.stack([np.sin(th) * np.cos(ph), np.sin(th) * np.sin(ph), np.cos(th)], axis=-1)
    a1, a2, b1, b2 = dirs

    def chsh(a1, a2, b1, b2):
        return np.einsum("ni,ij,nj->n", a1, t, b1 + b2) + np.einsum("ni,ij,nj->n", a2, t, b1 - b2)

    def fallback(v, old):
        return np.where(np.linalg.norm(v, axis=-1, keepdims=True) > 0, v, old)

    value = chsh(a1, a2, b1, b2)
    for _ in range(max_iter):
        a1 = fallback(_normalize_rows((b1 + b2) @ t.T), a1)
        a2 = fallback(_normalize_rows((b1 - b2) @ t.T), a2)
        b1 = fallback(_normalize_rows((a1 + a2) @ t), b1)
        b2 = fallback(_normalize_rows((a1 - a2) @ t), b2)
        new = chsh(a1, a2, b1, b2)
        done = np.max(new - value) < tol
        value = new
        if done:
            break

    best = int(np.argmax(value))
    setting = BellSetting(a1[best], a2[best], b1[best], b2[best])
    return float(abs(value[best])), setting


def trace_distance(rho, sigma) -> float:
    """(1/2) ||rho - sigma||_1."""
    diff = np.asarray(rho) - np.asarray(sigma)
    return float(0.5 * np.sum(np.abs(np.linalg.eigvalsh(0.5 * (diff + diff.conj().T)))))


def nearest_reference(rho) -> tuple[str, float]:
    """Closest named reference state and its trace distance."""
    name = min(REFERENCE_STATES, key=lambda k: trace_distance(rho, REFERENCE_STATES[k]))
    return name, trace_distance(rho, REFERENCE_STATES[name])


def asymptotic_concurrence(phi: float) -> float:
    """|cos phi|, the large-momentum, large-rapidity concurrence of the Bell pair state."""
    if not (0.0 <= phi < 2 * math.pi):
        raise DomainError("phi must lie in [0, 2 pi)")
    return abs(math.cos(phi))
