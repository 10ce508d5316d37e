"""Bookkeeping for the composite space and its nested fragment family.

The composite space is the principal system (factor 0) followed by the
environment sites 1..N.  Fragments are always the leading k sites; the
permutation-invariant models make only k relevant, and the non-invariant
case keeps the same leading-k convention.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CompositeSpace:
    """Dimensions of the system factor and each environment site."""

    system_dim: int
    env_dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.system_dim < 2:
            raise ValueError("system dimension must be at least 2")
        if len(self.env_dims) < 1:
            raise ValueError("environment must have at least one site")
        if any(d < 2 for d in self.env_dims):
            raise ValueError("every site dimension must be at least 2")

    @property
    def n_sites(self) -> int:
        return len(self.env_dims)

    @property
    def dims(self) -> tuple[int, ...]:
        """Factor dimensions with the system first."""
        return (self.system_dim, *self.env_dims)

    def fragment_dim(self, k: int) -> int:
        """Dimension of the leading-k fragment Hilbert space."""
        d = 1
        for x in self.env_dims[:k]:
            d *= x
        return d


@dataclass(frozen=True)
class Fragment:
    """The leading-k environment sites, indexed 1..k (system is factor 0)."""

    k: int
    sites: tuple[int, ...]


def fragment(space: CompositeSpace, k: int) -> Fragment:
    """First-k-sites fragment; k = 0 is the empty fragment."""
    if k < 0 or k > space.n_sites:
        raise ValueError(f"fragment size {k} outside [0, {space.n_sites}]")
    return Fragment(k=k, sites=tuple(range(1, k + 1)))


def qubit_space(n_sites: int) -> CompositeSpace:
    """Qubit system with n qubit environment sites."""
    return CompositeSpace(system_dim=2, env_dims=(2,) * n_sites)
