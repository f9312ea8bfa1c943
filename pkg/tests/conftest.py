import pytest

from parley.gazetteer import default_gazetteer


@pytest.fixture(scope="session")
def gaz():
    return default_gazetteer()
