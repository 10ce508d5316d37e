"""One-to-all premeasurement models and their branch-decomposed evolution.

The interaction Hamiltonian couples a non-degenerate system observable to a
sum of single-site environment operators.  Working in the system's pointer
basis, the joint propagator splits into per-branch, per-site 2x2 unitaries

    U(t) = sum_r |r><r| (x) prod_l exp(-i w_r g_l O_l t),

so the evolved joint state is fully described by one pure state per
(branch, site) pair.  Everything in this module keeps that O(N) form and
never builds the joint propagator; dense joint states are assembled only on
demand (and are what the small-N oracle tests exercise).

Conventions: the pointer basis is the computational basis, and Bloch angles
are defined in it, so gamma_00 = (1 + r cos(theta))/2 and
gamma_01 = r sin(theta) exp(-i phi)/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ShapeError
from .linalg import (
    ENTRY_CAP,
    check_entry_cap,
    hermiticity_defect,
    kron_vec_all,
    require_hermitian,
)

PAULI_Z = np.diag([1.0 + 0j, -1.0])
KET_PLUS = np.array([1.0, 1.0], dtype=complex) / np.sqrt(2.0)

# A ready state this close to an eigenstate of its site operator records
# nothing and is rejected.
_READY_EIGENSTATE_TOL = 1e-9


@dataclass(frozen=True)
class SystemObservable:
    """Non-degenerate system observable, diagonal in the pointer basis.

    `pointer_basis` holds the eigenvectors as columns; the default identity
    means the pointer basis is the computational basis, which is what every
    other routine in this package assumes.
    """

    eigenvalues: tuple[float, float] = (1.0, -1.0)
    pointer_basis: np.ndarray = field(default_factory=lambda: np.eye(2, dtype=complex))

    def __post_init__(self) -> None:
        if abs(self.eigenvalues[0] - self.eigenvalues[1]) < 1e-12:
            raise ValueError("system observable must be non-degenerate")
        v = np.asarray(self.pointer_basis)
        if np.abs(v.conj().T @ v - np.eye(2)).max() > 1e-10:
            raise ValueError("pointer basis must be orthonormal")

    @property
    def matrix(self) -> np.ndarray:
        v = self.pointer_basis
        return (v * np.asarray(self.eigenvalues)) @ v.conj().T

    @classmethod
    def pauli_z(cls) -> "SystemObservable":
        return cls()


@dataclass(frozen=True)
class EnvironmentSpec:
    """Couplings, site operators, and ready states for each environment site."""

    couplings: np.ndarray
    site_ops: tuple[np.ndarray, ...]
    ready_states: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        n = len(self.couplings)
        if n < 1:
            raise ValueError("environment needs at least one site")
        if len(self.site_ops) != n or len(self.ready_states) != n:
            raise ShapeError("couplings, site_ops and ready_states must have equal length")
        for op, ready in zip(self.site_ops, self.ready_states):
            if op.shape != (2, 2):
                raise ShapeError("site operators must be 2x2")
            if hermiticity_defect(op) > 1e-10:
                raise ValueError("site operators must be Hermitian")
            if abs(np.linalg.norm(ready) - 1.0) > 1e-10:
                raise ValueError("ready states must be normalized")
            _, vecs = np.linalg.eigh(require_hermitian(op))
            if np.abs(vecs.conj().T @ ready).max() > 1.0 - _READY_EIGENSTATE_TOL:
                raise ValueError("ready state must not be an eigenstate of its site operator")

    @property
    def n_sites(self) -> int:
        return len(self.couplings)


def zz_environment(n: int, g: float = 1.0, ready: np.ndarray | None = None) -> EnvironmentSpec:
    """Homogeneous Z-Z environment with identical couplings."""
    ready = KET_PLUS if ready is None else np.asarray(ready, dtype=complex)
    return EnvironmentSpec(
        couplings=np.full(n, float(g)),
        site_ops=(PAULI_Z,) * n,
        ready_states=(ready,) * n,
    )


def gue_environment(
    n: int, g: float, rng: np.random.Generator, ready: np.ndarray | None = None
) -> EnvironmentSpec:
    """Environment with site operators drawn independently from GUE(2)."""
    ready = KET_PLUS if ready is None else np.asarray(ready, dtype=complex)
    ops = tuple(sample_gue2(rng) for _ in range(n))
    return EnvironmentSpec(
        couplings=np.full(n, float(g)),
        site_ops=ops,
        ready_states=(ready,) * n,
    )


def zz_random_g_environment(
    n: int, g: float, rng: np.random.Generator, ready: np.ndarray | None = None
) -> EnvironmentSpec:
    """Z-Z environment with couplings drawn uniformly from [g/2, 3g/2].

    The band keeps every site coupled while breaking permutation invariance.
    """
    ready = KET_PLUS if ready is None else np.asarray(ready, dtype=complex)
    gs = rng.uniform(0.5 * g, 1.5 * g, size=n)
    return EnvironmentSpec(
        couplings=gs,
        site_ops=(PAULI_Z,) * n,
        ready_states=(ready,) * n,
    )


@dataclass(frozen=True)
class BlochState:
    """Qubit state (r, theta, phi) parametrized in the pointer basis."""

    r: float = 1.0
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.r <= 1.0:
            raise ValueError(f"Bloch radius {self.r} outside [0, 1]")

    def density_matrix(self) -> np.ndarray:
        g00 = (1.0 + self.r * np.cos(self.theta)) / 2.0
        g01 = self.r * np.sin(self.theta) * np.exp(-1j * self.phi) / 2.0
        return np.array([[g00, g01], [np.conj(g01), 1.0 - g00]], dtype=complex)


@dataclass(frozen=True)
class BranchRecord:
    """Per-branch, per-site pure states |Xi^r(t)>_l at a fixed time.

    `states[r, l]` is the 2-vector of site l conditioned on pointer index r.
    """

    t: float
    states: np.ndarray  # shape (2, n_sites, 2)

    @property
    def n_sites(self) -> int:
        return self.states.shape[1]

    def site_overlap(self, l: int) -> complex:
        """<Xi^0(t)|Xi^1(t)> at site l (0-based)."""
        return complex(np.vdot(self.states[0, l], self.states[1, l]))

    def fragment_vector(self, r: int, k: int) -> np.ndarray:
        """Product state of branch r over the first k sites (2^k vector)."""
        return kron_vec_all([self.states[r, l] for l in range(k)])


def evolve_branches(sys: SystemObservable, env: EnvironmentSpec, t: float) -> BranchRecord:
    """Apply the per-site branch unitaries exp(-i w_r g_l O_l t) to the ready states."""
    if t < 0:
        raise ValueError("time must be non-negative")
    n = env.n_sites
    states = np.empty((2, n, 2), dtype=complex)
    for l in range(n):
        w, v = np.linalg.eigh(require_hermitian(env.site_ops[l]))
        amp = v.conj().T @ env.ready_states[l]
        for r, omega in enumerate(sys.eigenvalues):
            phases = np.exp(-1j * omega * env.couplings[l] * w * t)
            states[r, l] = v @ (phases * amp)
    return BranchRecord(t=float(t), states=states)


def _tail_overlap(rec: BranchRecord, r: int, rp: int, k: int) -> complex:
    """Tr over sites > k of |Xi^r><Xi^rp| restricted to those sites."""
    out = 1.0 + 0j
    for l in range(k, rec.n_sites):
        out *= np.vdot(rec.states[rp, l], rec.states[r, l])
    return out


def joint_state(x: BlochState, rec: BranchRecord, cap: int = ENTRY_CAP) -> np.ndarray:
    """Full (N+1)-factor density matrix from the branch decomposition."""
    dim = 2 ** (rec.n_sites + 1)
    check_entry_cap(dim * dim, cap)
    gamma = x.density_matrix()
    branch = [kron_vec_all(rec.states[r]) for r in range(2)]
    rho = np.zeros((dim, dim), dtype=complex)
    half = dim // 2
    for r in range(2):
        for rp in range(2):
            block = gamma[r, rp] * np.outer(branch[r], branch[rp].conj())
            rho[r * half : (r + 1) * half, rp * half : (rp + 1) * half] = block
    return rho


def reduced_joint_state(
    x: BlochState, rec: BranchRecord, k: int, cap: int = ENTRY_CAP
) -> np.ndarray:
    """State on the system plus the leading-k fragment, sites > k traced out.

    Exact: the traced-out tail of each branch outer product contributes only
    the scalar product of its per-site overlaps.
    """
    if k < 0 or k > rec.n_sites:
        raise ValueError(f"fragment size {k} outside [0, {rec.n_sites}]")
    dk = 2**k
    check_entry_cap((2 * dk) ** 2, cap)
    gamma = x.density_matrix()
    frag = [rec.fragment_vector(r, k) for r in range(2)]
    rho = np.zeros((2 * dk, 2 * dk), dtype=complex)
    for r in range(2):
        for rp in range(2):
            coeff = gamma[r, rp] * _tail_overlap(rec, r, rp, k)
            rho[r * dk : (r + 1) * dk, rp * dk : (rp + 1) * dk] = coeff * np.outer(
                frag[r], frag[rp].conj()
            )
    return rho


def reduced_system_state(x: BlochState, rec: BranchRecord) -> np.ndarray:
    """System state after the interaction; off-diagonals carry the decoherence factor."""
    return reduced_joint_state(x, rec, 0)


def prc_defect(rec: BranchRecord, k: int) -> float:
    """|prod_{l<=k} <Xi^0|Xi^1>_l|; zero iff the branch fragment states are orthogonal."""
    if k < 1:
        raise ValueError("fragment must contain at least one site")
    out = 1.0 + 0j
    for l in range(k):
        out *= rec.site_overlap(l)
    return float(abs(out))


def prc_times(env: EnvironmentSpec, count: int = 8) -> np.ndarray | None:
    """Closed-form PRC grid pi(1+2n)/(4g) for the homogeneous Z-Z model.

    Only valid when every site operator is Z, all couplings are equal, every
    ready state has equal weight on |0> and |1>, and the system observable is
    Pauli-Z; returns None whenever no closed form is claimed.
    """
    g = env.couplings[0]
    if np.abs(env.couplings - g).max() > 1e-12:
        return None
    for op, ready in zip(env.site_ops, env.ready_states):
        if np.abs(op - PAULI_Z).max() > 1e-12:
            return None
        if abs(abs(ready[0]) ** 2 - abs(ready[1]) ** 2) > 1e-12:
            return None
    n = np.arange(count)
    return np.pi * (1 + 2 * n) / (4.0 * g)


def sample_gue2(rng: np.random.Generator) -> np.ndarray:
    """One 2x2 GUE sample: N(0,1) diagonal, (x+iy)/sqrt(2) off-diagonal."""
    d0 = rng.standard_normal()
    d1 = rng.standard_normal()
    x = rng.standard_normal()
    y = rng.standard_normal()
    off = (x + 1j * y) / np.sqrt(2.0)
    return np.array([[d0, off], [np.conj(off), d1]], dtype=complex)
