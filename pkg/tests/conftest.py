import random

import pytest


@pytest.fixture
def rng():
    return random.Random(20260826)


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "slow: long-running exhaustive suites"
    )
