"""Shared fixtures for the pde_nudging test-suite."""

import numpy as np
import pytest

from pde_nudging.interpolants import Grid1D
from pde_nudging.models import (
    CatalyticRod,
    CatalyticRodParams,
    ChafeeInfante,
    ChafeeInfanteParams,
    KSEParams,
    KuramotoSivashinsky,
)


@pytest.fixture
def periodic_grid():
    """128 points on [0, 2 pi)."""
    return Grid1D(2.0 * np.pi, 128, "periodic")


@pytest.fixture
def neumann_grid():
    """101 points on [0, 1], both ends included."""
    return Grid1D(1.0, 101, "neumann")


@pytest.fixture
def rod_grid():
    """21 points on [0, pi], dx = pi/20."""
    return Grid1D(np.pi, 21, "dirichlet")


@pytest.fixture
def ci_model():
    return ChafeeInfante(ChafeeInfanteParams(nu=1.0, alpha=100.0))


@pytest.fixture
def kse_chaotic():
    return KuramotoSivashinsky(KSEParams(nu=4.0 / 15.0))


@pytest.fixture
def kse_stable():
    return KuramotoSivashinsky(KSEParams(nu=1.1))


@pytest.fixture
def rod_model():
    return CatalyticRod(CatalyticRodParams(beta_T=50.0, beta_U=2.0,
                                           gamma_act=4.0))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
