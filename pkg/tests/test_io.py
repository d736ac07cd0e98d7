"""graph6 and JSON serialization: frozen bytes, round trips, determinism."""

from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from llycurv.errors import InvalidParamsError
from llycurv.families import catalog, paley_graph, petersen_graph
from llycurv.graphio import from_graph6, from_json, to_graph6, to_json
from llycurv.graphs import Graph


def test_graph6_hand_encoded_examples():
    assert to_graph6(complete2()) == "A_"
    assert to_graph6(triangle()) == "Bw"
    assert to_graph6(path3()) == "Bg"
    assert to_graph6(Graph(1, [])) == "@"


def complete2():
    return Graph(2, [(0, 1)])


def triangle():
    return Graph(3, [(0, 1), (0, 2), (1, 2)])


def path3():
    return Graph(3, [(0, 1), (1, 2)])


def test_graph6_roundtrip_catalog():
    for entry in catalog():
        assert from_graph6(to_graph6(entry.graph)) == entry.graph


def test_graph6_matches_networkx():
    for g in (petersen_graph(), paley_graph(13), triangle(), path3()):
        theirs = nx.to_graph6_bytes(
            make_nx(g.n, list(g.edges())), header=False
        ).decode().strip()
        assert to_graph6(g) == theirs


def test_graph6_large_n_size_field():
    g = Graph(63, [(0, 62), (1, 2)])
    text = to_graph6(g)
    assert text.startswith("~")
    assert from_graph6(text) == g


def test_graph6_rejects_garbage():
    with pytest.raises(InvalidParamsError):
        from_graph6("B")  # truncated body
    with pytest.raises(InvalidParamsError):
        from_graph6("B" + chr(30))


def test_json_roundtrip_and_determinism():
    g = paley_graph(13)
    text = to_json(g)
    assert from_json(text) == g
    assert text == to_json(paley_graph(13))
    assert '"edges":[[0,1]' in text


def test_json_edges_sorted():
    g = Graph(4, [(3, 2), (1, 0)])
    assert to_json(g) == '{"edges":[[0,1],[2,3]],"n":4}\n'


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 20), st.data())
def test_graph6_roundtrip_random(n, data):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    g = Graph(n, edges)
    assert from_graph6(to_graph6(g)) == g
    theirs = nx.to_graph6_bytes(make_nx(n, edges), header=False).decode().strip()
    assert to_graph6(g) == theirs


def make_nx(n, edges):
    h = nx.Graph()
    h.add_nodes_from(range(n))
    h.add_edges_from(edges)
    return h
