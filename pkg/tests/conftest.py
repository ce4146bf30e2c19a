import pytest

from schreier.catalog import standard_catalog


@pytest.fixture(scope="session")
def catalog():
    """Payloads of the built-in catalog keyed by entry id."""
    return {e.id: e.payload for e in standard_catalog()}


@pytest.fixture(scope="session")
def entries():
    return {e.id: e for e in standard_catalog()}
