"""Core graph structure: distances, edge decomposition, regularity."""

from __future__ import annotations

import random

import pytest

from llycurv.errors import (
    InvalidVertexError,
    NotAmplyRegularError,
    NotAnEdgeError,
)
from llycurv.families import (
    catalog,
    cocktail_party_graph,
    complete_graph,
    cycle_graph,
    hypercube_graph,
    paley_graph,
    petersen_graph,
    rook_graph,
    shrikhande_graph,
)
from llycurv.graphs import (
    Graph,
    RegularityKind,
    SrgParams,
    bfs_distances,
    classify_regularity,
    decompose_edge,
    merge_intersection,
    neighbor_profile,
    parameter_identity_check,
)
from helpers import matrix_power_distances


def test_bfs_cycle_six():
    assert bfs_distances(cycle_graph(6), 0) == [0, 1, 2, 3, 2, 1]


def test_bfs_complete_five():
    assert bfs_distances(complete_graph(5), 2) == [1, 1, 0, 1, 1]


def test_bfs_petersen_profile():
    dist = bfs_distances(petersen_graph(), 0)
    assert all(d is not None and d <= 2 for d in dist)
    assert sorted(dist).count(1) == 3
    assert sorted(dist).count(2) == 6


def test_bfs_source_out_of_range():
    with pytest.raises(InvalidVertexError):
        bfs_distances(cycle_graph(4), 7)


def test_bfs_unreachable_marked_none():
    g = Graph(5, [(0, 1), (2, 3)])
    dist = bfs_distances(g, 0)
    assert dist[:2] == [0, 1] and dist[2] is None and dist[4] is None


@pytest.mark.parametrize(
    "g",
    [petersen_graph(), paley_graph(13), hypercube_graph(3), rook_graph(3)],
    ids=["petersen", "paley13", "q3", "rook3"],
)
def test_bfs_matches_matrix_power_oracle(g):
    oracle = matrix_power_distances(g)
    for s in range(g.n):
        assert bfs_distances(g, s) == oracle[s]


def test_bfs_triangle_inequality_sampled():
    g = paley_graph(17)
    dist = [bfs_distances(g, s) for s in range(g.n)]
    rng = random.Random(5)
    for _ in range(300):
        a, b, c = rng.randrange(17), rng.randrange(17), rng.randrange(17)
        assert dist[a][c] <= dist[a][b] + dist[b][c]


def test_merge_intersection():
    assert merge_intersection((1, 3, 5, 9), (2, 3, 4, 9, 12)) == (3, 9)
    assert merge_intersection((), (1, 2)) == ()


def test_decompose_paley13_edge_01():
    # squares mod 13 are {1,3,4,9,10,12}
    parts = decompose_edge(paley_graph(13), 0, 1)
    assert parts.delta == (4, 10)
    assert parts.nx == (3, 9, 12)
    assert parts.ny == (2, 5, 11)
    assert parts.pxy == (6, 7, 8)


def test_decompose_complete_graph():
    parts = decompose_edge(complete_graph(5), 1, 3)
    assert set(parts.delta) == {0, 2, 4}
    assert parts.nx == () and parts.ny == () and parts.pxy == ()


def test_decompose_petersen_sizes():
    g = petersen_graph()
    for x, y in g.edges():
        parts = decompose_edge(g, x, y)
        assert len(parts.delta) == 0
        assert len(parts.nx) == len(parts.ny) == 2
        assert len(parts.pxy) == 4


def test_decompose_not_an_edge():
    with pytest.raises(NotAnEdgeError):
        decompose_edge(cycle_graph(5), 0, 2)


def test_decompose_partitions_vertex_set():
    for entry in catalog():
        g = entry.graph
        x, y = next(iter(g.edges()))
        parts = decompose_edge(g, x, y)
        pieces = [(x,), (y,), parts.delta, parts.nx, parts.ny, parts.pxy]
        flat = [v for piece in pieces for v in piece]
        assert sorted(flat) == list(range(g.n))
        if g.is_regular():
            assert len(parts.nx) == len(parts.ny)


def test_classify_rook4_strongly_regular():
    rc = classify_regularity(rook_graph(4))
    assert rc.kind is RegularityKind.STRONGLY_REGULAR
    assert rc.params == SrgParams(16, 6, 2, 2)


def test_classify_hypercube_amply_but_not_strongly():
    rc = classify_regularity(hypercube_graph(3))
    assert rc.kind is RegularityKind.AMPLY_REGULAR
    assert rc.params == SrgParams(8, 3, 0, 2)


def test_classify_path_irregular():
    rc = classify_regularity(Graph(3, [(0, 1), (1, 2)]))
    assert rc.kind is RegularityKind.IRREGULAR


def test_classify_complete_and_empty_are_regular():
    assert classify_regularity(complete_graph(4)).kind is RegularityKind.REGULAR
    assert classify_regularity(Graph(4, [])).kind is RegularityKind.REGULAR


def test_classify_catalog_matches_expected_params():
    for entry in catalog():
        rc = classify_regularity(entry.graph)
        if entry.params is None:
            assert rc.params is None
        else:
            assert rc.params == entry.params, entry.name


def test_neighbor_profile_paley13_degree_conservation():
    g = paley_graph(13)
    params = SrgParams(13, 6, 2, 3)
    prof = neighbor_profile(g, 0, 1, 3, params=params)
    assert prof.ell + prof.in_delta + prof.in_nx + prof.in_pxy == params.d - 1


@pytest.mark.parametrize(
    "g,params",
    [
        (paley_graph(13), SrgParams(13, 6, 2, 3)),
        (petersen_graph(), SrgParams(10, 3, 0, 1)),
        (cocktail_party_graph(2), SrgParams(4, 2, 0, 2)),
        (hypercube_graph(3), SrgParams(8, 3, 0, 2)),
    ],
    ids=["paley13", "petersen", "c4", "q3"],
)
def test_neighbor_profile_agrees_with_adjacency_everywhere(g, params):
    # the formulas are cross-checked against real intersection counts inside
    # neighbor_profile; any disagreement raises
    for x, y in g.edges():
        parts = decompose_edge(g, x, y)
        for v in parts.nx:
            prof = neighbor_profile(g, x, y, v, params=params)
            assert prof.in_delta >= 0 and prof.in_nx >= 0 and prof.in_pxy >= 0


def test_neighbor_profile_detects_wrong_params():
    g = petersen_graph()
    x, y = next(iter(g.edges()))
    parts = decompose_edge(g, x, y)
    with pytest.raises(NotAmplyRegularError):
        neighbor_profile(g, x, y, parts.nx[0], params=SrgParams(10, 3, 1, 1))


def test_neighbor_profile_requires_member_of_nx():
    g = paley_graph(13)
    with pytest.raises(InvalidVertexError):
        neighbor_profile(g, 0, 1, 4, params=SrgParams(13, 6, 2, 3))  # 4 is in delta


def test_identity_check_paley13_equal():
    check = parameter_identity_check(paley_graph(13))
    assert (check.lhs, check.rhs, check.relation) == (18, 18, "equal")


def test_identity_check_hypercube_strict():
    check = parameter_identity_check(hypercube_graph(3))
    assert (check.lhs, check.rhs, check.relation) == (6, 8, "strict")


def test_identity_check_shrikhande_equal():
    check = parameter_identity_check(shrikhande_graph())
    assert (check.lhs, check.rhs, check.relation) == (18, 18, "equal")


def test_identity_equality_iff_strongly_regular():
    for entry in catalog():
        rc = classify_regularity(entry.graph)
        if not rc.is_amply_regular:
            continue
        check = parameter_identity_check(entry.graph)
        assert (check.relation == "equal") == rc.is_strongly_regular, entry.name


def test_graph_rejects_loops_and_bad_vertices():
    with pytest.raises(Exception):
        Graph(3, [(0, 0)])
    with pytest.raises(InvalidVertexError):
        Graph(3, [(0, 5)])


def test_graph_adjacency_sorted_and_symmetric():
    g = paley_graph(13)
    for v in range(g.n):
        row = g.neighbors(v)
        assert list(row) == sorted(row)
        for w in row:
            assert g.has_edge(w, v)
