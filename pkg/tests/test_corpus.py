from itertools import combinations

import networkx as nx
import pytest

from glg.corpus import (
    CONNECTED_COUNTS,
    CUBIC_CONNECTED_COUNTS,
    all_graphs,
    connected_graphs,
    corpus_path,
    load_corpus,
    regular_graphs,
    vertex_invariant,
)
from glg.graph import encode_graph6


@pytest.mark.parametrize("n", range(1, 9))
def test_shipped_connected_counts(n, corpus):
    graphs = corpus(f"connected{n}")
    assert len(graphs) == CONNECTED_COUNTS[n]
    assert all(g.n == n and g.is_connected() for g in graphs)


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_shipped_cubic_counts(n, corpus):
    graphs = corpus(f"cubic{n}")
    assert len(graphs) == CUBIC_CONNECTED_COUNTS[n]
    assert all(g.degrees() == [3] * n and g.is_connected() for g in graphs)


def test_all_graph_counts():
    assert [len(all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


@pytest.mark.parametrize("n", [5, 6])
def test_enumeration_matches_shipped_file(n):
    ours = sorted(encode_graph6(g) for g in connected_graphs(n))
    shipped = sorted(corpus_path(f"connected{n}").read_text().split())
    assert ours == shipped


def test_regular_enumeration_matches_shipped_file():
    assert [encode_graph6(g) for g in regular_graphs(8, 3)] == corpus_path("cubic8").read_text().split()


@pytest.mark.parametrize("name", ["connected6", "cubic10"])
def test_pairwise_non_isomorphic(name):
    graphs = [nx.Graph(g.edges()) for g in load_corpus(name)]
    for a, b in combinations(graphs, 2):
        assert not nx.is_isomorphic(a, b)


def test_invariant_is_relabeling_invariant():
    g = nx.petersen_graph()
    h = nx.relabel_nodes(g, {v: (3 * v + 1) % 10 for v in g})
    from glg.graph import Graph

    gg = Graph.from_edges(10, g.edges())
    hh = Graph.from_edges(10, h.edges())
    assert vertex_invariant(gg) == vertex_invariant(hh)


def test_unknown_corpus():
    with pytest.raises(KeyError):
        corpus_path("connected42")


def test_petersen_in_cubic10(corpus):
    pet = nx.petersen_graph()
    assert any(nx.is_isomorphic(pet, nx.Graph(g.edges())) for g in corpus("cubic10"))
