"""Maximal clique enumeration against a naive reference implementation."""

import pytest

from paleyclique import (
    CliqueSet, OutOfRangeVertex, enumerate_maximal_cliques, is_clique,
    is_maximal_clique, second_largest_census, subfield_clique,
)


def _reference_maximal_cliques(graph):
    """Textbook Bron-Kerbosch without pivoting or pruning."""
    out = []
    neigh = [set() for _ in range(graph.n)]
    for i in range(graph.n):
        for j in range(graph.n):
            if graph.adjacent(i, j):
                neigh[i].add(j)

    def bk(r, p, x):
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        for v in sorted(p):
            bk(r | {v}, p & neigh[v], x & neigh[v])
            p = p - {v}
            x = x | {v}

    bk(set(), set(range(graph.n)), set())
    return sorted(out)


def test_enumeration_matches_reference_q9(graph_for):
    graph = graph_for(9)
    ref = _reference_maximal_cliques(graph)
    got = sorted(c.vertices for c in enumerate_maximal_cliques(graph))
    assert got == ref
    sizes = {}
    for c in ref:
        sizes[len(c)] = sizes.get(len(c), 0) + 1
    assert sizes == {5: 10368, 9: 45}


def test_enumeration_determinism(graph_for):
    graph = graph_for(11)
    first = [c.vertices for c in enumerate_maximal_cliques(graph,
                                                           min_size=7)]
    second = [c.vertices for c in enumerate_maximal_cliques(graph,
                                                            min_size=7)]
    assert first == second
    assert len(first) == len(set(first))  # no duplicates


def test_size_filter_and_min_size(graph_for):
    graph = graph_for(9)
    only9 = list(enumerate_maximal_cliques(graph, size_filter=9))
    assert len(only9) == 45
    assert all(c.size == 9 for c in only9)
    at_least5 = list(enumerate_maximal_cliques(graph, min_size=5))
    assert len(at_least5) == 10368 + 45


def test_workers_agree_with_serial(graph_for):
    graph = graph_for(11)
    serial = [c.vertices for c in enumerate_maximal_cliques(graph,
                                                            min_size=7)]
    parallel = [c.vertices for c in enumerate_maximal_cliques(
        graph, min_size=7, workers=2)]
    assert serial == parallel


@pytest.mark.parametrize("q,count", ((9, 10368), (11, 7260), (13, 35152)))
def test_census_counts(census_for, q, count):
    cen = census_for(q)
    assert cen["count"] == count
    assert cen["max_clique_count"] == q * (q + 1) // 2
    assert cen["max_clique_size"] == q


def test_clique_predicates(graph_for):
    graph = graph_for(9)
    sub = subfield_clique(graph)
    assert is_clique(graph, sub.vertices)
    assert is_maximal_clique(graph, sub.vertices)
    assert is_clique(graph, sub.vertices[:4])
    assert not is_maximal_clique(graph, sub.vertices[:4])
    assert not is_clique(graph, range(graph.n))
    with pytest.raises(OutOfRangeVertex):
        is_clique(graph, [0, graph.n])


def test_clique_set_canonicalization():
    a = CliqueSet([3, 1, 2])
    b = CliqueSet((2, 3, 1))
    assert a == b and hash(a) == hash(b)
    assert a.vertices == (1, 2, 3)
    with pytest.raises(ValueError):
        CliqueSet([1, 1, 2])
