import pytest

from paleyclique import (
    build_graph, orbit_partition, published_field, second_largest_census,
)

ALL_Q = (9, 11, 13, 17, 19, 23)

_CTX = {}
_GRAPH = {}
_CENSUS = {}
_ORBITS = {}


@pytest.fixture(scope="session")
def ctx_for():
    def get(q):
        if q not in _CTX:
            _CTX[q] = published_field(q)
        return _CTX[q]
    return get


@pytest.fixture(scope="session")
def graph_for(ctx_for):
    def get(q):
        if q not in _GRAPH:
            _GRAPH[q] = build_graph(ctx_for(q))
        return _GRAPH[q]
    return get


@pytest.fixture(scope="session")
def census_for(graph_for):
    def get(q):
        if q not in _CENSUS:
            _CENSUS[q] = second_largest_census(graph_for(q))
        return _CENSUS[q]
    return get


@pytest.fixture(scope="session")
def orbits_for(ctx_for, census_for):
    def get(q):
        if q not in _ORBITS:
            _ORBITS[q] = orbit_partition(ctx_for(q), census_for(q)["cliques"])
        return _ORBITS[q]
    return get
