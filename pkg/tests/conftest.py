import pytest

from widthone import sigma


@pytest.fixture(autouse=True)
def _fresh_eulerian_cache():
    sigma.clear_cache()
    yield
    sigma.clear_cache()
