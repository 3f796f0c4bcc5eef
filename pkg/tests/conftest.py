import pytest
from hypothesis import settings

from piecewise_rsk import NTableau

settings.register_profile('default', deadline=None, max_examples=60)
settings.load_profile('default')


@pytest.fixture
def example_matrix():
    return NTableau.from_rows([[1, 0, 2], [0, 2, 0], [1, 1, 0]])


@pytest.fixture
def example_image():
    return NTableau.from_rows([[1, 2, 3], [1, 2, 3], [2, 4, 4]])
