""" conftest.py -- Shared fixtures for the Pythagoras tests.

    Language: Python 3.9
"""

import numpy as np
import pytest


@pytest.fixture
def rng() -> np.random.Generator:
    """Fixed-seed generator so randomised properties are reproducible."""
    return np.random.default_rng(20231018)
