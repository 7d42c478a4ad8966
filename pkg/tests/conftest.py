"""Shared fixtures."""

import pytest

from rbtrees.core import NormalFormEngine
from rbtrees.models import RationalPolynomial


@pytest.fixture
def engine() -> NormalFormEngine:
    """A fresh engine with default caps."""
    return NormalFormEngine()


@pytest.fixture(scope="module")
def shared_engine() -> NormalFormEngine:
    """One engine per module, for grid sweeps that reuse the memo table."""
    return NormalFormEngine()


@pytest.fixture
def poly():
    """Build a rational polynomial from coefficients, lowest power first."""

    def make(*coeffs):
        return RationalPolynomial(coeffs)

    return make
