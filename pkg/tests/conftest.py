"""Test configuration and fixtures."""

import numpy as np
import pytest

from trimodule_lab.core.logging import setup_logging
from trimodule_lab.services.bialgebra import BialgebraFD
from trimodule_lab.services.fixtures import fixture_bialgebra, pointed_example_algebra
from trimodule_lab.services.trimodule_algebra import TrimoduleAlgebraFD


def pytest_configure(config):
    """Route log events to stderr as the command-line entry point does."""
    setup_logging()


@pytest.fixture(scope="session")
def k() -> BialgebraFD:
    """The ground field as a bialgebra."""
    return fixture_bialgebra("k")


@pytest.fixture(scope="session")
def z2() -> BialgebraFD:
    """The group algebra k[Z/2]."""
    return fixture_bialgebra("k[Z/2]")


@pytest.fixture(scope="session")
def ks() -> BialgebraFD:
    """k[S] for the idempotent monoid S = {e, s}."""
    return fixture_bialgebra("k[S]")


@pytest.fixture(scope="session")
def h4() -> BialgebraFD:
    """Sweedler's four-dimensional Hopf algebra."""
    return fixture_bialgebra("H4")


@pytest.fixture(scope="session")
def pointed_algebra() -> TrimoduleAlgebraFD:
    """The pointed reconstruction over k[S] with eps(s) = 0."""
    return pointed_example_algebra()


@pytest.fixture
def rng() -> np.random.Generator:
    """A seeded generator for sampled morphisms."""
    return np.random.default_rng(0)
