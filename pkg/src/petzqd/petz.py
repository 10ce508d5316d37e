"""Petz recovery maps for the fragment channels and the appendix map family.

The recovery map with reference s inverts a channel L on its image via

    P(y) = s^(1/2) L†[ L(s)^(-1/2) y L(s)^(-1/2) ] s^(1/2),

with Moore-Penrose inverses throughout.  Because L is kept in Kraus form,
the sandwich folds into twisted Kraus operators G_r = L(s)^(-1/2) K_r once
per map, making each recovery a handful of thin matrix products.

The imperfect-recovery map M_k and the Markov extension map are implemented
directly from their defining formulas; the residual map acting after the
(k+1)-recovery is never materialized (it is defined only on the image of the
Petz map and need not be CP), so its fixed-point statement is exposed as a
defect instead.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channels import QuantumChannel, encoding_channel
from .errors import RecoveryNegativityError, ReferenceRankError, ShapeError, SupportError
from .infotheory import fidelity
from .linalg import (
    PINV_TOL,
    hermitianize,
    inv_sqrtm_psd,
    kron,
    partial_trace,
    require_hermitian,
    sqrtm_psd,
    trace_norm,
)
from .model import BlochState, BranchRecord

# Reference states with an eigenvalue at or below this floor are rejected.
REFERENCE_RANK_FLOOR = 1e-12

# Shared clipping policy for recovered states: inputs may put at most this
# fraction of their trace outside Supp(L(s)), and recovered eigenvalues below
# -NEGATIVITY_TOL abort instead of being clipped.
SUPPORT_WEIGHT_TOL = 1e-8
NEGATIVITY_TOL = 1e-9


@dataclass(frozen=True)
class PetzMap:
    """Recovery map for `channel` with full-rank reference `reference`."""

    channel: QuantumChannel
    reference: np.ndarray
    sqrt_reference: np.ndarray
    channel_of_reference: np.ndarray
    inv_sqrt_channel_of_reference: np.ndarray
    support_proj: np.ndarray
    twisted_kraus: tuple[np.ndarray, ...]

    def raw(self, y: np.ndarray) -> np.ndarray:
        """Petz output without any clipping; Hermitian but possibly slightly negative."""
        if y.shape != (self.channel.dim_out, self.channel.dim_out):
            raise ShapeError(f"input shape {y.shape} does not match channel output")
        acc = np.zeros((self.channel.dim_in, self.channel.dim_in), dtype=complex)
        for g in self.twisted_kraus:
            acc += g.conj().T @ y @ g
        return hermitianize(self.sqrt_reference @ acc @ self.sqrt_reference)

    def recover_with_clip(self, y: np.ndarray) -> tuple[np.ndarray, float]:
        """Recovered state plus the total clipped negative weight."""
        tr_y = float(np.trace(y).real)
        if tr_y <= 0:
            raise SupportError("input must have positive trace")
        outside = tr_y - float(np.einsum("ij,ji->", self.support_proj, y).real)
        if outside > SUPPORT_WEIGHT_TOL * tr_y:
            raise SupportError(
                f"input weight {outside:.3e} outside Supp(channel(reference)) "
                f"exceeds {SUPPORT_WEIGHT_TOL:.1e} of trace"
            )
        w, v = np.linalg.eigh(self.raw(y))
        if w.min() < -NEGATIVITY_TOL:
            raise RecoveryNegativityError(f"recovered eigenvalue {w.min():.3e} below tolerance")
        clip = float(np.abs(w[w < 0]).sum())
        w = np.maximum(w, 0.0)
        total = float(w.sum())
        if total <= 0:
            raise RecoveryNegativityError("recovered state has no positive weight")
        rho = (v * (w / total)) @ v.conj().T
        return hermitianize(rho), clip

    def recover(self, y: np.ndarray) -> np.ndarray:
        return self.recover_with_clip(y)[0]


def build_petz(
    ch: QuantumChannel, reference: np.ndarray, pinv_tol: float = PINV_TOL
) -> PetzMap:
    """Construct and cache the factors of the Petz map for `ch`.

    The reference must be full-rank on the input space; the channel image
    then automatically stays inside Supp(ch(reference)).
    """
    s = require_hermitian(reference)
    if s.shape != (ch.dim_in, ch.dim_in):
        raise ShapeError(f"reference shape {s.shape} does not match channel input")
    if np.linalg.eigvalsh(s).min() <= REFERENCE_RANK_FLOOR:
        raise ReferenceRankError("reference state must be full-rank")
    lam_s = hermitianize(ch.apply(s))
    # One eigendecomposition feeds both cached factors; only the eigenpairs
    # above the pseudo-inverse cut contribute, which keeps the reconstruction
    # cheap when the channel image is low-rank.
    w, v = np.linalg.eigh(lam_s)
    cut = pinv_tol * np.abs(w).max() if w.size else 0.0
    vs = v[:, w > cut]
    ws = w[w > cut]
    inv_sqrt = (vs / np.sqrt(ws)) @ vs.conj().T
    return PetzMap(
        channel=ch,
        reference=s,
        sqrt_reference=sqrtm_psd(s),
        channel_of_reference=lam_s,
        inv_sqrt_channel_of_reference=inv_sqrt,
        support_proj=vs @ vs.conj().T,
        twisted_kraus=tuple(inv_sqrt @ op for op in ch.kraus_ops),
    )


def prc_fidelity_closed_form(gamma: np.ndarray) -> float:
    """Recovery fidelity at a PRC time from the initial-state entries alone.

    F^2 = 1 - 2 (p0 p1 - sqrt(p0 p1 (p0 p1 - |gamma_01|^2))) with p_r the
    pointer-basis populations; the inner radicand is clamped at zero against
    round-off (it vanishes identically for pure states).
    """
    g = require_hermitian(gamma)
    p0 = float(g[0, 0].real)
    p1 = float(g[1, 1].real)
    a = p0 * p1
    c = abs(g[0, 1]) ** 2
    inner = max(a * (a - c), 0.0)
    f2 = 1.0 - 2.0 * (a - np.sqrt(inner))
    return float(np.sqrt(max(f2, 0.0)))


def recovery_quality(
    x: BlochState, rec: BranchRecord, k: int, reference: np.ndarray | None = None
) -> float:
    """Root fidelity between the initial system state and its Petz round-trip."""
    gamma = x.density_matrix()
    reference = np.eye(2, dtype=complex) / 2.0 if reference is None else reference
    ch = encoding_channel(rec, k)
    pmap = build_petz(ch, reference)
    recovered, _ = pmap.recover_with_clip(ch.apply(gamma))
    return fidelity(gamma, recovered)


@dataclass(frozen=True)
class ImperfectRecoveryMap:
    """The map taking fragment-(k+1) states to the k-recovery output.

    apply(X) = s^(1/2) L_{k+1}†[ (A Tr_last[X] A) (x) I ] s^(1/2) with
    A = L_k(s)^(-1/2); composing it with the (k+1)-encoding reproduces the
    k-Petz round-trip exactly.
    """

    channel_k: QuantumChannel
    channel_k1: QuantumChannel
    sqrt_reference: np.ndarray
    inv_sqrt_channel_k_of_reference: np.ndarray

    def apply(self, x_frag: np.ndarray) -> np.ndarray:
        dk1 = self.channel_k1.dim_out
        if x_frag.shape != (dk1, dk1):
            raise ShapeError(f"input shape {x_frag.shape} != ({dk1}, {dk1})")
        k1 = dk1.bit_length() - 1
        reduced = partial_trace(x_frag, (2,) * k1, tuple(range(k1 - 1)))
        a = self.inv_sqrt_channel_k_of_reference
        core = kron(a @ reduced @ a, np.eye(2, dtype=complex))
        out = self.channel_k1.apply_adjoint(core)
        return self.sqrt_reference @ out @ self.sqrt_reference

    def apply_adjoint(self, x_sys: np.ndarray) -> np.ndarray:
        s_half = self.sqrt_reference
        a = self.inv_sqrt_channel_k_of_reference
        inner = a @ self.channel_k.apply(s_half @ x_sys @ s_half) @ a
        return kron(inner, np.eye(2, dtype=complex))


def build_m_map(
    rec: BranchRecord, k: int, reference: np.ndarray, pinv_tol: float = PINV_TOL
) -> ImperfectRecoveryMap:
    if k < 1 or k >= rec.n_sites:
        raise ValueError(f"need 1 <= k < {rec.n_sites}, got {k}")
    s = require_hermitian(reference)
    if np.linalg.eigvalsh(s).min() <= REFERENCE_RANK_FLOOR:
        raise ReferenceRankError("reference state must be full-rank")
    ch_k = encoding_channel(rec, k)
    ch_k1 = encoding_channel(rec, k + 1)
    lam_k_s = hermitianize(ch_k.apply(s))
    return ImperfectRecoveryMap(
        channel_k=ch_k,
        channel_k1=ch_k1,
        sqrt_reference=sqrtm_psd(s),
        inv_sqrt_channel_k_of_reference=inv_sqrtm_psd(lam_k_s, pinv_tol),
    )


def r_map_defect(
    x: BlochState, rec: BranchRecord, k: int, reference: np.ndarray | None = None
) -> float:
    """Trace-norm gap between the k- and (k+1)-Petz round-trips of x.

    This is exactly how far the residual map sits from the identity on the
    (k+1)-recovered state; it vanishes wherever the extra site carries no
    additional information.
    """
    reference = np.eye(2, dtype=complex) / 2.0 if reference is None else reference
    gamma = x.density_matrix()
    outs = []
    for kk in (k, k + 1):
        ch = encoding_channel(rec, kk)
        pmap = build_petz(ch, reference)
        outs.append(pmap.raw(ch.apply(gamma)))
    return trace_norm(outs[0] - outs[1])


@dataclass(frozen=True)
class MarkovExtensionMap:
    """Recovery of a fragment extension from the fragment alone.

    apply(X) = rho_{F_{k+1}}^(1/2) ((rho_{F_k}^(-1/2) X rho_{F_k}^(-1/2)) (x) I)
    rho_{F_{k+1}}^(1/2); when the extra site is conditionally decoupled
    (vanishing conditional mutual information) this extension is exact.
    """

    sqrt_big: np.ndarray
    inv_sqrt_small: np.ndarray
    extra_dim: int

    def apply(self, x_frag: np.ndarray) -> np.ndarray:
        d = self.inv_sqrt_small.shape[0]
        if x_frag.shape != (d, d):
            raise ShapeError(f"input shape {x_frag.shape} != ({d}, {d})")
        eye = np.eye(self.extra_dim, dtype=complex)
        inner = kron(self.inv_sqrt_small @ x_frag @ self.inv_sqrt_small, eye)
        return self.sqrt_big @ inner @ self.sqrt_big

    def extend(self, rho_sys_frag: np.ndarray, sys_dim: int = 2) -> np.ndarray:
        """(id_system (x) map) applied to a joint system+fragment state."""
        d = self.inv_sqrt_small.shape[0]
        if rho_sys_frag.shape != (sys_dim * d, sys_dim * d):
            raise ShapeError("joint state shape does not match system x fragment")
        eye_sys = np.eye(sys_dim, dtype=complex)
        eye_extra = np.eye(self.extra_dim, dtype=complex)
        stage = kron(eye_sys, self.inv_sqrt_small) @ rho_sys_frag @ kron(
            eye_sys, self.inv_sqrt_small
        )
        stage = kron(stage, eye_extra)
        big = kron(eye_sys, self.sqrt_big)
        return big @ stage @ big


def markov_recovery(
    rho_joint: np.ndarray, dims: tuple[int, ...], pinv_tol: float = PINV_TOL
) -> MarkovExtensionMap:
    """Extension map built from the marginals of a system+fragment+site state.

    `dims` lists the factors of `rho_joint` with the system first and the
    extra site last; the map reconstructs the state on all of `dims[1:]` from
    its restriction to `dims[1:-1]`.
    """
    if len(dims) < 3:
        raise ShapeError("need at least system, one fragment site, and the extra site")
    frag_all = tuple(range(1, len(dims)))
    rho_big = partial_trace(rho_joint, dims, frag_all)
    rho_small = partial_trace(rho_joint, dims, frag_all[:-1])
    return MarkovExtensionMap(
        sqrt_big=sqrtm_psd(rho_big),
        inv_sqrt_small=inv_sqrtm_psd(rho_small, pinv_tol),
        extra_dim=dims[-1],
    )


def markov_defect(rho_joint: np.ndarray, dims: tuple[int, ...]) -> float:
    """Trace-norm error of reconstructing the joint state from one less site."""
    rmap = markov_recovery(rho_joint, dims)
    keep = tuple(range(len(dims) - 1))
    rho_small_joint = partial_trace(rho_joint, dims, keep)
    return trace_norm(rmap.extend(rho_small_joint, sys_dim=dims[0]) - rho_joint)
