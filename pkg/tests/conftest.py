import pytest
from hypothesis import settings

from ordinalforge import hierarchy as H

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def standard_terms():
    """All standard terms of norm at most 7, ascending."""
    return H.enumerate_standard(H.NormBudget(7))
