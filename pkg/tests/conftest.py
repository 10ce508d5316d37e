from __future__ import annotations

import numpy as np
import pytest

from petzqd.model import SystemObservable, evolve_branches, gue_environment, zz_environment


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def pauli_z_system():
    return SystemObservable.pauli_z()


@pytest.fixture
def zz4(pauli_z_system):
    """Homogeneous Z-Z model with four sites at a generic time."""
    env = zz_environment(4, 1.0)
    return env, evolve_branches(pauli_z_system, env, 0.4)


@pytest.fixture
def zz4_prc(pauli_z_system):
    env = zz_environment(4, 1.0)
    return env, evolve_branches(pauli_z_system, env, np.pi / 4)


@pytest.fixture
def gue3(pauli_z_system):
    env = gue_environment(3, 1.0, np.random.default_rng(5))
    return env, evolve_branches(pauli_z_system, env, 0.7)
