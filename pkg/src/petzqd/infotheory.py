"""Entropic and distance functionals with explicit support-inclusion semantics.

All values are computed in natural log internally; pass `base=2` to convert.
Relative entropy follows the piecewise definition: it is finite only when the
support of the first state lies inside the support of the second, and the
+inf sentinel (`math.inf`) is returned otherwise.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import NamedTuple

import numpy as np

from .channels import QuantumChannel
from .linalg import partial_trace, require_hermitian, sqrtm_psd, support_projector

# Eigenvalues at or below this floor are treated as zero in 0*log(0) limits.
EIG_FLOOR = 1e-14

# Eigenvector mass of rho outside Supp(sigma) above this triggers the
# +inf sentinel.
SUPPORT_MASS_TOL = 1e-10


class FawziRennerResult(NamedTuple):
    fidelity: float
    bound: float
    margin: float
    delta: float


def _base_factor(base: float | None) -> float:
    return 1.0 if base is None else 1.0 / math.log(base)


def _entropy_of_eigenvalues(w: np.ndarray) -> float:
    w = w[w > EIG_FLOOR]
    return float(-(w * np.log(w)).sum())


def vn_entropy(rho: np.ndarray, base: float | None = None) -> float:
    """von Neumann entropy -Tr[rho log rho]."""
    w = np.linalg.eigvalsh(require_hermitian(rho))
    return _entropy_of_eigenvalues(w) * _base_factor(base)


def mutual_information(
    rho_joint: np.ndarray,
    dims: Sequence[int],
    part_a: Sequence[int],
    part_b: Sequence[int],
    base: float | None = None,
) -> float:
    """I(A:B) = S(A) + S(B) - S(AB) for disjoint factor sets A and B."""
    part_a = tuple(part_a)
    part_b = tuple(part_b)
    if set(part_a) & set(part_b):
        raise ValueError("parts A and B must be disjoint")
    s_a = vn_entropy(partial_trace(rho_joint, dims, part_a))
    s_b = vn_entropy(partial_trace(rho_joint, dims, part_b))
    if len(set(part_a) | set(part_b)) == len(dims):
        s_ab = vn_entropy(rho_joint)
    else:
        s_ab = vn_entropy(partial_trace(rho_joint, dims, part_a + part_b))
    return (s_a + s_b - s_ab) * _base_factor(base)


def conditional_mutual_information(
    rho_joint: np.ndarray,
    dims: Sequence[int],
    part_a: Sequence[int],
    part_b1: Sequence[int],
    part_b2: Sequence[int],
    base: float | None = None,
) -> float:
    """I(A:B''|B') = I(A:B'B'') - I(A:B'); zero signals a quantum Markov chain."""
    b_all = tuple(part_b1) + tuple(part_b2)
    return mutual_information(rho_joint, dims, part_a, b_all, base) - mutual_information(
        rho_joint, dims, part_a, part_b1, base
    )


def _support_mass_outside(rho: np.ndarray, sigma_vecs: np.ndarray, sigma_w: np.ndarray) -> float:
    """Weight of rho on the kernel eigenvectors of sigma."""
    kernel = sigma_vecs[:, sigma_w <= EIG_FLOOR]
    if kernel.shape[1] == 0:
        return 0.0
    return float(np.einsum("ij,ik,kj->", kernel.conj(), rho, kernel).real)


def relative_entropy(rho: np.ndarray, sigma: np.ndarray, base: float | None = None) -> float:
    """S(rho||sigma) = Tr[rho log rho - rho log sigma], or +inf off-support."""
    rho = require_hermitian(rho)
    sigma = require_hermitian(sigma)
    w_s, v_s = np.linalg.eigh(sigma)
    if _support_mass_outside(rho, v_s, w_s) > SUPPORT_MASS_TOL:
        return math.inf
    w_r = np.linalg.eigvalsh(rho)
    plus = -_entropy_of_eigenvalues(w_r)
    # Tr[rho log sigma] restricted to the support of sigma.
    on = w_s > EIG_FLOOR
    weights = np.einsum("ij,ik,kj->j", v_s[:, on].conj(), rho, v_s[:, on]).real
    minus = float((weights * np.log(w_s[on])).sum())
    return (plus - minus) * _base_factor(base)


def fidelity(rho: np.ndarray, sigma: np.ndarray) -> float:
    """Root fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)).

    Evaluated as the trace norm of sqrt(rho) sqrt(sigma): identical in exact
    arithmetic, but singular-value round-off stays additive instead of being
    amplified by the outer square root.
    """
    if rho.shape != sigma.shape:
        raise ValueError(f"state shapes differ: {rho.shape} vs {sigma.shape}")
    product = sqrtm_psd(rho) @ sqrtm_psd(sigma)
    return float(np.linalg.svd(product, compute_uv=False).sum())


def fawzi_renner_check(
    rho: np.ndarray, reference: np.ndarray, ch: QuantumChannel
) -> FawziRennerResult:
    """Petz round-trip fidelity against the bound exp(delta/2).

    delta = S(ch(rho)||ch(reference)) - S(rho||reference) is computed in
    natural log regardless of any display base; an infinite relative entropy
    makes the bound vacuous (0).
    """
    from .petz import build_petz  # local import to avoid a module cycle

    pmap = build_petz(ch, reference)
    recovered = pmap.recover(ch.apply(rho))
    f = fidelity(rho, recovered)
    before = relative_entropy(rho, reference)
    after = relative_entropy(ch.apply(rho), ch.apply(reference))
    if math.isinf(before) or math.isinf(after):
        return FawziRennerResult(fidelity=f, bound=0.0, margin=f, delta=math.nan)
    delta = after - before
    bound = math.exp(delta / 2.0)
    return FawziRennerResult(fidelity=f, bound=bound, margin=f - bound, delta=delta)


def support_inclusion_check(
    rho: np.ndarray, sigma: np.ndarray, ch: QuantumChannel, tol: float = SUPPORT_MASS_TOL
) -> bool | None:
    """Whether Supp(ch(rho)) stays inside Supp(ch(sigma)).

    Returns None (inapplicable) when the precondition Supp(rho) <= Supp(sigma)
    already fails; CPTP maps must turn every applicable pair into True.
    """
    w_s, v_s = np.linalg.eigh(require_hermitian(sigma))
    if _support_mass_outside(require_hermitian(rho), v_s, w_s) > tol:
        return None
    out_rho = ch.apply(rho)
    out_sigma = ch.apply(sigma)
    kernel = np.eye(ch.dim_out) - support_projector(out_sigma)
    mass = float(np.trace(kernel @ out_rho @ kernel).real)
    return mass <= tol
