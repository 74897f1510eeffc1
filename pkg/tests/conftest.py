import pytest

from spectral.signals import seeded_generator


@pytest.fixture
def rng(request):
    """Generator keyed by the test name so every test draws its own stream"""
    return seeded_generator(0, request.node.name)
