"""Shared quiver factories and small field fixtures."""

from __future__ import annotations

import pytest

from quiverdec import Quiver, ff_make


def a2():
    return Quiver(("v1", "v2"), (("v1", "v2"),))


def a3_path():
    return Quiver(("v1", "v2", "v3"), (("v1", "v2"), ("v2", "v3")))


def kronecker(m: int = 2):
    return Quiver(("v1", "v2"), (("v1", "v2"),) * m)


def jordan():
    return Quiver(("v1",), (("v1", "v1"),))


@pytest.fixture(scope="session")
def gf2():
    return ff_make(2, 1)


@pytest.fixture(scope="session")
def gf3():
    return ff_make(3, 1)


@pytest.fixture(scope="session")
def gf4():
    return ff_make(2, 2)


@pytest.fixture(scope="session")
def gf5():
    return ff_make(5, 1)
