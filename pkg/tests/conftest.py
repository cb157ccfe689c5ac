import pytest

from ssig import build_graph


@pytest.fixture(scope="session")
def graphs():
    """Session-wide memoized graph builder, shared across test modules."""
    cache = {}

    def get(p, ell):
        key = (p, ell)
        if key not in cache:
            cache[key] = build_graph(p, ell)
        return cache[key]

    return get
