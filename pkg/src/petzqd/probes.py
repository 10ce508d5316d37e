"""Seeded probe operators for identity checks and randomized trials."""

from __future__ import annotations

import numpy as np

from .linalg import hermitianize


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return hermitianize(g)


def random_pure(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return v / np.linalg.norm(v)


def random_density(dim: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    """Wishart-style random state, optionally rank-deficient."""
    rank = dim if rank is None else rank
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_full_rank_density(
    dim: int, rng: np.random.Generator, floor: float = 1e-3
) -> np.ndarray:
    """Random state with every eigenvalue at least `floor` after mixing."""
    rho = random_density(dim, rng)
    rho = (1.0 - dim * floor) * rho + floor * np.eye(dim)
    return rho / np.trace(rho).real
