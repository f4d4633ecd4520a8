# tests/conftest.py
"""Shared fixtures: the worked pairs over H = Z/2, I = (Z/2)^2 and their extensions."""

from __future__ import annotations

import pytest

from bracekit import catalog
from bracekit.brace import FiniteBrace
from bracekit.extensions import build_extension


@pytest.fixture
def z2() -> FiniteBrace:
    return FiniteBrace.trivial(2)


@pytest.fixture
def klein():
    return catalog.module("Z2xZ2")


@pytest.fixture
def amended():
    return catalog.worked_amended_pair()


@pytest.fixture
def trivial_pair():
    return catalog.worked_trivial_pair()


@pytest.fixture
def amended_cocycles(amended):
    """beta/tau I-indices -> cocycle, for the four cocycles of the amended pair."""
    return {(b, t): catalog.pair_cocycle(amended, b, t) for b in (0, 2) for t in (0, 1)}


@pytest.fixture
def amended_extension(amended, amended_cocycles):
    """The extension of the nonzero class, beta(1, 1) = (1, 0), tau(1, 1) = (0, 1)."""
    return build_extension(amended, amended_cocycles[(2, 1)], name="amended nonzero")


@pytest.fixture
def split_extension(trivial_pair):
    return build_extension(trivial_pair, catalog.pair_cocycle(trivial_pair, 0, 0), name="direct product")
