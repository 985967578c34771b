"""Shared fixtures: compile the jitted kernels before any timed test."""

import pytest

from locfields import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    _kernels.warmup()
    yield
