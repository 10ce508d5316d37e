"""Fragment encoding channels in Kraus form, with CPTP validation.

A premeasurement branch record defines, for every fragment size k, the
channel taking the system state to the fragment state.  Its Kraus operators
are rank-one,

    E_r = |branch_r over sites 1..k> <r|,

so channels are kept as Kraus lists (two operators of shape 2^k x 2), never
as dense superoperators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ShapeError
from .linalg import ENTRY_CAP, check_entry_cap, kron, partial_trace, trace_norm
from .model import BlochState, BranchRecord
from .probes import random_hermitian


@dataclass(frozen=True)
class QuantumChannel:
    """CPTP map held as a list of Kraus operators (dim_out x dim_in each)."""

    kraus_ops: tuple[np.ndarray, ...]
    dim_in: int
    dim_out: int

    def __post_init__(self) -> None:
        for op in self.kraus_ops:
            if op.shape != (self.dim_out, self.dim_in):
                raise ShapeError(
                    f"Kraus operator shape {op.shape} != ({self.dim_out}, {self.dim_in})"
                )

    def apply(self, rho: np.ndarray) -> np.ndarray:
        """sum_r K_r rho K_r†."""
        if rho.shape != (self.dim_in, self.dim_in):
            raise ShapeError(f"state shape {rho.shape} != ({self.dim_in}, {self.dim_in})")
        out = np.zeros((self.dim_out, self.dim_out), dtype=complex)
        for op in self.kraus_ops:
            out += op @ rho @ op.conj().T
        return out

    def apply_adjoint(self, obs: np.ndarray) -> np.ndarray:
        """Trace dual sum_r K_r† X K_r."""
        if obs.shape != (self.dim_out, self.dim_out):
            raise ShapeError(f"observable shape {obs.shape} != ({self.dim_out}, {self.dim_out})")
        out = np.zeros((self.dim_in, self.dim_in), dtype=complex)
        for op in self.kraus_ops:
            out += op.conj().T @ obs @ op
        return out

    def completeness_defect(self) -> float:
        """Max-entry deviation of sum_r K_r† K_r from the identity."""
        acc = sum(op.conj().T @ op for op in self.kraus_ops)
        return float(np.abs(acc - np.eye(self.dim_in)).max())

    def choi_matrix(self) -> np.ndarray:
        """Choi matrix with factors ordered (output, input).

        Built as sum_r vec(K_r) vec(K_r)† with row-major vec, so tracing out
        the output factor of a trace-preserving channel gives I on the input.
        """
        d = self.dim_in * self.dim_out
        check_entry_cap(d * d)
        out = np.zeros((d, d), dtype=complex)
        for op in self.kraus_ops:
            v = op.reshape(d)
            out += np.outer(v, v.conj())
        return out


def encoding_channel(rec: BranchRecord, k: int, cap: int = ENTRY_CAP) -> QuantumChannel:
    """Channel mapping the system state onto the leading-k fragment.

    Kraus operators |branch_r(k)><r| satisfy completeness by construction
    since each branch fragment vector is normalized.
    """
    if k < 1 or k > rec.n_sites:
        raise ValueError(f"fragment size {k} outside [1, {rec.n_sites}]")
    dk = 2**k
    check_entry_cap(dk * dk, cap)
    ops = []
    for r in range(2):
        e = np.zeros(2, dtype=complex)
        e[r] = 1.0
        ops.append(np.outer(rec.fragment_vector(r, k), e.conj()))
    return QuantumChannel(kraus_ops=tuple(ops), dim_in=2, dim_out=dk)


def choi_min_eigenvalue(ch: QuantumChannel) -> float:
    return float(np.linalg.eigvalsh(ch.choi_matrix()).min())


def _state_probes() -> list[np.ndarray]:
    """Five qubit states spanning the Hermitian 2x2 space."""
    return [
        BlochState(1.0, 0.0, 0.0).density_matrix(),
        BlochState(1.0, np.pi, 0.0).density_matrix(),
        BlochState(1.0, np.pi / 2, 0.0).density_matrix(),
        BlochState(1.0, np.pi / 2, np.pi / 2).density_matrix(),
        BlochState(0.0, 0.0, 0.0).density_matrix(),
    ]


def nesting_defect_states(rec: BranchRecord, k: int) -> float:
    """Defect of the k-channel against trace-after-(k+1)-channel on a state basis."""
    if k < 1 or k >= rec.n_sites:
        raise ValueError(f"need 1 <= k < {rec.n_sites}, got {k}")
    ch_k = encoding_channel(rec, k)
    ch_k1 = encoding_channel(rec, k + 1)
    frag_dims = (2,) * (k + 1)
    keep = tuple(range(k))
    defect = 0.0
    for rho in _state_probes():
        via_k = ch_k.apply(rho)
        via_k1 = partial_trace(ch_k1.apply(rho), frag_dims, keep)
        defect = max(defect, trace_norm(via_k - via_k1))
    return defect


def nesting_defect_adjoint(
    rec: BranchRecord, k: int, rng: np.random.Generator | None = None
) -> float:
    """Defect of the dual identity: k-adjoint vs (k+1)-adjoint of obs (x) I."""
    if k < 1 or k >= rec.n_sites:
        raise ValueError(f"need 1 <= k < {rec.n_sites}, got {k}")
    rng = np.random.default_rng(0) if rng is None else rng
    ch_k = encoding_channel(rec, k)
    ch_k1 = encoding_channel(rec, k + 1)
    obs_probes = [
        np.eye(ch_k.dim_out, dtype=complex),
        np.outer(rec.fragment_vector(0, k), rec.fragment_vector(0, k).conj()),
        random_hermitian(ch_k.dim_out, rng),
    ]
    eye2 = np.eye(2, dtype=complex)
    defect = 0.0
    for obs in obs_probes:
        via_k = ch_k.apply_adjoint(obs)
        via_k1 = ch_k1.apply_adjoint(kron(obs, eye2))
        defect = max(defect, trace_norm(via_k - via_k1))
    return defect


def nest_check(rec: BranchRecord, k: int, rng: np.random.Generator | None = None) -> float:
    """Largest defect of the fragment-nesting identities at size k.

    Combines the state-side check (the k-channel equals the (k+1)-channel
    followed by a trace over site k+1) with its adjoint dual.
    """
    return max(nesting_defect_states(rec, k), nesting_defect_adjoint(rec, k, rng))
