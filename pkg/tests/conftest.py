import os

import pytest
from hypothesis import HealthCheck, settings

from catalog_search.enumerate import GraphCatalog, catalog_path, enumerate_graphs, load_catalog

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def connected_graphs():
    """Connected graphs on 1..6 vertices, one per isomorphism class."""
    return {n: list(enumerate_graphs(n, connected_only=True)) for n in range(1, 7)}


@pytest.fixture(scope="session")
def all_graphs():
    return {n: list(enumerate_graphs(n)) for n in range(0, 7)}


@pytest.fixture(scope="session")
def order8_catalog() -> GraphCatalog:
    """Connected 8-vertex graphs, from the catalog file when present, otherwise generated."""
    path = catalog_path(os.getenv("RECON_CATALOG_DIR", "catalogs"), 8, connected_only=True)
    if path.exists():
        return load_catalog(path, connected_only=True)
    return enumerate_graphs(8, connected_only=True)
