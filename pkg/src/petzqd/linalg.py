"""Dense complex matrix kernels every other module builds on.

Conventions used throughout the package:

* subsystem 0 is the principal system, environment sites follow in order;
  ``dims`` arguments list the factor dimensions in exactly that order;
* Hermitian inputs are symmetrized before eigendecomposition, and
  inverse-type matrix functions follow the Moore-Penrose convention
  (eigenvalues negligible relative to the largest are mapped to zero);
* a single dense matrix may hold at most ``ENTRY_CAP`` entries.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

import numpy as np

from .errors import NonHermitianError, ShapeError, SizeCapError

# Largest number of entries a dense matrix may hold (a 2048 x 2048 matrix).
ENTRY_CAP = 2**22

# Relative tolerance for accepting a matrix as Hermitian.
HERMITICITY_TOL = 1e-10

# Relative eigenvalue cutoff for Moore-Penrose pseudo-inverses.  PRC-time
# states are exactly rank-deficient and must pseudo-invert cleanly.
PINV_TOL = 1e-10


def check_entry_cap(entries: int, cap: int = ENTRY_CAP) -> None:
    """Raise SizeCapError if a dense matrix with `entries` entries is too big."""
    if entries > cap:
        raise SizeCapError(f"matrix with {entries} entries exceeds cap {cap}")


def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def hermitianize(m: np.ndarray) -> np.ndarray:
    """Hermitian part (m + m†)/2."""
    return (m + m.conj().T) / 2


def hermiticity_defect(m: np.ndarray) -> float:
    """Max-entry deviation of (m - m†)/2, relative to the max entry of m."""
    scale = float(np.abs(m).max()) or 1.0
    return float(np.abs(m - m.conj().T).max() / 2) / scale


def require_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Return the symmetrized matrix, rejecting inputs far from Hermitian."""
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {m.shape}")
    if hermiticity_defect(m) > tol:
        raise NonHermitianError(f"hermiticity defect {hermiticity_defect(m):.3e} > {tol:.3e}")
    return hermitianize(m)


def kron(a: np.ndarray, b: np.ndarray, cap: int = ENTRY_CAP) -> np.ndarray:
    """Kronecker product with the entry cap enforced on the result."""
    check_entry_cap(a.shape[0] * b.shape[0] * a.shape[1] * b.shape[1], cap)
    return np.kron(a, b)


def kron_all(mats: Sequence[np.ndarray], cap: int = ENTRY_CAP) -> np.ndarray:
    """Left-folded Kronecker product of a nonempty sequence."""
    out = np.asarray(mats[0])
    for m in mats[1:]:
        out = kron(out, np.asarray(m), cap)
    return out


def kron_vec_all(vecs: Sequence[np.ndarray]) -> np.ndarray:
    """Kronecker product of 1-d vectors; the empty product is the scalar [1]."""
    out = np.ones(1, dtype=complex)
    for v in vecs:
        out = np.kron(out, np.asarray(v, dtype=complex))
    return out


def partial_trace(m: np.ndarray, dims: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out every factor not listed in `keep`.

    `dims` lists the dimension of each tensor factor with subsystem 0 first;
    the result keeps the surviving factors in their original order.
    """
    dims = tuple(int(d) for d in dims)
    total = int(np.prod(dims))
    if m.shape != (total, total):
        raise ShapeError(f"matrix shape {m.shape} does not match dims {dims}")
    keep = sorted(set(int(i) for i in keep))
    if keep and (keep[0] < 0 or keep[-1] >= len(dims)):
        raise ShapeError(f"keep indices {keep} out of range for {len(dims)} factors")
    traced = [i for i in range(len(dims)) if i not in keep]
    d_keep = int(np.prod([dims[i] for i in keep])) if keep else 1
    d_traced = total // d_keep

    n = len(dims)
    tensor = m.reshape(dims + dims)
    perm = keep + traced + [n + i for i in keep] + [n + i for i in traced]
    tensor = tensor.transpose(perm).reshape(d_keep, d_traced, d_keep, d_traced)
    return np.einsum("ijkj->ik", tensor)


def trace_norm(m: np.ndarray) -> float:
    """Sum of singular values."""
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {m.shape}")
    return float(np.linalg.svd(m, compute_uv=False).sum())


def herm_fn(
    m: np.ndarray,
    fn: Callable[[np.ndarray], np.ndarray],
    pinv_tol: float | None = None,
    tol: float = HERMITICITY_TOL,
) -> np.ndarray:
    """Apply a scalar function to the eigenvalues of a Hermitian matrix.

    With `pinv_tol` set, eigenvalues of magnitude at most ``pinv_tol * max|w|``
    are mapped to zero instead of through `fn` (Moore-Penrose convention for
    inverse-type functions).
    """
    h = require_hermitian(m, tol)
    w, v = np.linalg.eigh(h)
    if pinv_tol is not None:
        cut = pinv_tol * np.abs(w).max() if w.size else 0.0
        fw = np.zeros_like(w)
        big = np.abs(w) > cut
        fw[big] = fn(w[big])
    else:
        fw = fn(w)
    return (v * fw) @ v.conj().T


def sqrtm_psd(m: np.ndarray) -> np.ndarray:
    """Square root of a PSD Hermitian matrix; tiny negative round-off is clipped."""
    return herm_fn(m, lambda w: np.sqrt(np.maximum(w, 0.0)))


def inv_sqrtm_psd(m: np.ndarray, pinv_tol: float = PINV_TOL) -> np.ndarray:
    """Moore-Penrose inverse square root of a PSD Hermitian matrix."""
    return herm_fn(m, lambda w: 1.0 / np.sqrt(w), pinv_tol=pinv_tol)


def support_projector(m: np.ndarray, pinv_tol: float = PINV_TOL) -> np.ndarray:
    """Projector onto the span of eigenvectors with non-negligible eigenvalue."""
    h = require_hermitian(m)
    w, v = np.linalg.eigh(h)
    cut = pinv_tol * np.abs(w).max() if w.size else 0.0
    vs = v[:, np.abs(w) > cut]
    return vs @ vs.conj().T
