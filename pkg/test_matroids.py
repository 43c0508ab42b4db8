"""
Tests for simplicial complexes and the graph matroid criterion.

Usage:
    pytest test_matroids.py
"""
import random

import networkx as nx
import pytest

from ncgraph.errors import ComplexError, NotAClique, NotAMatroid, TooLarge
from ncgraph.graphs import SimpleGraph, clique_number
from ncgraph.matroids import (
    SimplicialComplex,
    cross_validate_matroid,
    extend_clique,
    from_graph,
    has_exchange_property,
    is_matroid_graph,
    is_trim,
    uniform_complex,
)
from ncgraph.runner import random_cluster_complement


def complete_multipartite(*sizes: int) -> SimpleGraph:
    part = [i for i, size in enumerate(sizes) for _ in range(size)]
    n = len(part)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]]
    return SimpleGraph.from_edges(n, edges)


EDGE_PLUS_POINT = SimpleGraph.from_edges(3, [(0, 1)])


class TestSimplicialComplex:
    def test_create_requires_hereditary_faces(self):
        with pytest.raises(ComplexError):
            SimplicialComplex.create(3, [(), (0,), (0, 1)])
        with pytest.raises(ComplexError):
            SimplicialComplex.create(3, [])
        with pytest.raises(ComplexError):
            SimplicialComplex.create(2, [(), (3,)])

    def test_create_canonicalises(self):
        complex_ = SimplicialComplex.create(2, [[], [1], [0], [1, 0], (0, 1)])
        assert len(complex_) == 4
        assert (1, 0) in complex_
        assert complex_.dimension == 1

    def test_empty_face_only(self):
        complex_ = SimplicialComplex.create(0, [()])
        assert complex_.dimension == -1
        assert has_exchange_property(complex_) == (True, None)

    def test_graph_complex(self):
        path = SimpleGraph.from_edges(4, [(0, 1), (1, 2)])
        complex_ = from_graph(path)
        assert is_trim(complex_)
        assert complex_.facets() == [(3,), (0, 1), (1, 2)]

    def test_uniform_complexes_are_matroids(self):
        assert has_exchange_property(uniform_complex(5, 3)) == (True, None)
        assert len(uniform_complex(4, 2)) == 1 + 4 + 6

    def test_exchange_counterexample(self):
        assert has_exchange_property(from_graph(EDGE_PLUS_POINT)) == (False, ((0, 1), (2,)))


class TestMatroidGraphs:
    def test_complete_and_multipartite_graphs(self):
        assert is_matroid_graph(SimpleGraph.complete(4)) == (True, None)
        assert is_matroid_graph(SimpleGraph.empty(3)) == (True, None)
        assert is_matroid_graph(complete_multipartite(2, 2, 2))[0]
        assert is_matroid_graph(SimpleGraph.from_edges(3, [(0, 1), (1, 2)]))[0]

    def test_witness_is_an_induced_complement_path(self):
        matroid, (a, b, c) = is_matroid_graph(EDGE_PLUS_POINT)
        assert not matroid
        assert (a, b, c) == (0, 2, 1)
        assert EDGE_PLUS_POINT.has_edge(a, c)
        assert not EDGE_PLUS_POINT.has_edge(a, b)
        assert not EDGE_PLUS_POINT.has_edge(b, c)

    def test_cycle_of_five_is_not_a_matroid(self):
        c5 = SimpleGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
        assert not is_matroid_graph(c5)[0]
        assert cross_validate_matroid(c5) is False

    def test_cross_validation(self):
        assert cross_validate_matroid(complete_multipartite(1, 3, 2)) is True
        assert cross_validate_matroid(EDGE_PLUS_POINT) is False
        with pytest.raises(TooLarge):
            cross_validate_matroid(SimpleGraph.empty(65))

    def test_extend_clique(self):
        graph = complete_multipartite(2, 2, 2)
        assert extend_clique(graph, [0]) == (0, 2, 4)
        assert extend_clique(graph, [1, 5]) == (1, 2, 5)
        assert extend_clique(graph, []) == (0, 2, 4)

    def test_extend_clique_errors(self):
        with pytest.raises(NotAClique):
            extend_clique(complete_multipartite(2, 2), [0, 1])
        with pytest.raises(NotAMatroid):
            extend_clique(EDGE_PLUS_POINT, [0])

    def test_extend_clique_reaches_omega_from_every_clique(self):
        rng = random.Random(11)
        for _ in range(12):
            graph, parts = random_cluster_complement(rng, 16)
            omega = clique_number(graph)[0]
            assert omega == parts
            seeds = [()] + [tuple(c) for c in nx.enumerate_all_cliques(graph.to_networkx())]
            for seed in seeds:
                result = extend_clique(graph, seed)
                assert set(seed) <= set(result)
                assert graph.is_clique(result)
                assert len(result) == omega
