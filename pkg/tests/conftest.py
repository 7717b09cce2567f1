import random

import pytest
from hypothesis import settings

settings.register_profile("ci", deadline=None, derandomize=True)
settings.load_profile("ci")


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        type=int,
        default=24257,
        help="seed for the hand-rolled randomized property tests",
    )


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


def rotations(seq):
    """All rotations of a sequence, as tuples."""
    seq = tuple(seq)
    return [seq[i:] + seq[:i] for i in range(len(seq))]
