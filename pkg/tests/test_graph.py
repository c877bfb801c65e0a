import itertools
import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from conftest import connected_graphs, from_nx, random_connected
from dispersal import families as F
from dispersal.errors import ConnectivityError, InputError
from dispersal.graph import (
    Graph,
    bfs_distances,
    cartesian_product,
    complement,
    distance_k_graph,
    distance_matrix,
    eccentricity_report,
    h_k_graph,
    is_connected,
)


def test_graph_rejects_bad_adjacency():
    with pytest.raises(InputError):
        Graph(2, ((1,), ()))
    with pytest.raises(InputError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(InputError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(InputError):
        Graph(0, ())


def test_bfs_examples():
    assert bfs_distances(F.path(2), 0) == [0, 1, 2]
    assert bfs_distances(F.cycle(6), 0) == [0, 1, 2, 3, 2, 1]
    d = bfs_distances(Graph.from_edges(2, []), 0)
    assert d[0] == 0 and d[1] > 1  # sentinel beats any finite distance
    with pytest.raises(InputError):
        bfs_distances(F.path(2), 3)


def test_distance_matrix_examples():
    assert distance_matrix(F.grid(2, 2)).diameter == 2
    assert distance_matrix(F.hypercube(3))(0b000, 0b111) == 3
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    er = eccentricity_report(distance_matrix(star))
    assert er.radius == 1 and max(er.eccentricity) == 2


def test_distance_matrix_disconnected():
    with pytest.raises(ConnectivityError) as info:
        distance_matrix(Graph.from_edges(3, [(0, 1)]))
    assert info.value.pair == (0, 2)
    assert not is_connected(Graph.from_edges(3, [(0, 1)]))


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=10))
def test_distance_matrix_matches_networkx(g):
    dm = distance_matrix(g)
    h = nx.Graph(g.edges())
    h.add_nodes_from(range(g.n))
    ref = dict(nx.all_pairs_shortest_path_length(h))
    for u in range(g.n):
        for v in range(g.n):
            assert dm(u, v) == ref[u][v]


@settings(max_examples=60, deadline=None)
@given(connected_graphs(max_n=9))
def test_distance_matrix_invariants(g):
    d = distance_matrix(g).dist
    assert (np.diag(d) == 0).all()
    assert (d == d.T).all()
    for u, v in itertools.product(range(g.n), repeat=2):
        assert (d[u, v] == 1) == g.has_edge(u, v)
    for a, b, c in itertools.product(range(g.n), repeat=3):
        assert d[a, c] <= d[a, b] + d[b, c]


def test_eccentricity_grid_4x6():
    er = eccentricity_report(distance_matrix(F.grid(4, 6)))
    assert er.radius == 5
    # s, t (row 1) and v, u (row 2), columns 2 and 3
    assert er.central_vertices == (8, 9, 14, 15)
    assert er.uniquely_eccentric_central == (8, 9, 14, 15)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_eccentricity_hypercube(n):
    er = eccentricity_report(distance_matrix(F.hypercube(n)))
    assert er.radius == n
    assert er.uniquely_eccentric_central == tuple(range(2 ** n))


def test_eccentricity_grid_3x5():
    er = eccentricity_report(distance_matrix(F.grid(3, 5)))
    assert er.radius == 3
    assert er.central_vertices == (7,)
    assert er.uniquely_eccentric_central == ()


@pytest.mark.parametrize("m", range(2, 13))
def test_grid_radius_closed_forms(m):
    for n in range(2, 13):
        er = eccentricity_report(distance_matrix(F.grid(m, n)))
        if m % 2 == 0 and n % 2 == 0:
            assert er.radius == (m + n) // 2
            assert len(er.uniquely_eccentric_central) == 4
        elif m % 2 == 1 and n % 2 == 1:
            assert er.radius == (m + n) // 2 - 1
            assert len(er.central_vertices) == 1 and not er.uniquely_eccentric_central
        else:
            assert er.radius == (m + n - 1) // 2
            assert len(er.central_vertices) == 2 and not er.uniquely_eccentric_central


def test_distance_k_examples():
    g = F.cycle(7)
    assert distance_k_graph(distance_matrix(g), 1).same_edges(g)
    assert distance_k_graph(distance_matrix(F.path(3)), 2).edges() == [(0, 2), (1, 3)]
    g4 = distance_k_graph(distance_matrix(F.cycle(8)), 4)
    assert g4.edges() == [(0, 4), (1, 5), (2, 6), (3, 7)]
    assert distance_k_graph(distance_matrix(F.cycle(8)), 9).num_edges == 0


def test_h_k_examples():
    assert h_k_graph(distance_matrix(F.cycle(5)), 1).num_edges == 10
    h3 = h_k_graph(distance_matrix(F.cycle(7)), 3)
    assert all(h3.degree(v) == 2 for v in range(7))
    assert is_connected(h3)
    assert h_k_graph(distance_matrix(F.cycle(8)), 4).num_edges == 4
    with pytest.raises(InputError):
        h_k_graph(distance_matrix(F.cycle(8)), 0)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=9))
def test_distance_graphs_partition_pairs(g):
    dm = distance_matrix(g)
    layers = [set(distance_k_graph(dm, k).edges()) for k in range(1, dm.diameter + 1)]
    assert sum(len(x) for x in layers) == g.n * (g.n - 1) // 2
    assert len(set().union(*layers)) == g.n * (g.n - 1) // 2
    for k in range(1, dm.diameter + 2):
        assert set(h_k_graph(dm, k).edges()) == set().union(set(), *layers[k - 1:])


def test_complement_examples():
    assert complement(F.complete(4)).num_edges == 0
    c5 = complement(F.cycle(5))
    assert sorted(c5.degree(v) for v in range(5)) == [2] * 5 and is_connected(c5)
    petersen = from_nx(nx.petersen_graph())
    comp = complement(petersen)
    assert h_k_graph(distance_matrix(comp), 2).same_edges(petersen)


def test_reduction_identity_random():
    rng = random.Random(7)
    checked = 0
    while checked < 30:
        g = random_connected(rng, rng.randint(4, 10), 0.4)
        comp = complement(g)
        if not is_connected(comp):
            continue
        assert h_k_graph(distance_matrix(comp), 2).same_edges(g)
        checked += 1


def test_cartesian_product_examples():
    sq = cartesian_product(F.path(1), F.path(1))
    assert sq.num_edges == 4 and all(sq.degree(v) == 2 for v in range(4)) and is_connected(sq)
    for m in range(2, 9):
        for n in range(2, 9):
            assert cartesian_product(F.path(m - 1), F.path(n - 1)).same_edges(F.grid(m, n))
    g, h = F.cycle(3), F.cycle(5)
    p = cartesian_product(g, h)
    assert p.num_edges == g.n * h.num_edges + h.n * g.num_edges


def test_product_distance_is_sum():
    pairs = [(F.cycle(3), F.cycle(5)), (F.path(2), F.cycle(4)), (F.complete(3), F.path(3))]
    small = [g for g in (F.path(1), F.path(2), F.cycle(3), F.cycle(4), F.complete(4))]
    pairs += [(a, b) for a in small for b in small]
    for g, h in pairs:
        dg, dh = distance_matrix(g), distance_matrix(h)
        dp = distance_matrix(cartesian_product(g, h))
        expected = dg.dist[:, None, :, None] + dh.dist[None, :, None, :]
        assert (dp.dist == expected.reshape(g.n * h.n, g.n * h.n)).all()


def test_json_round_trip():
    g = F.grid(3, 4)
    text = g.to_json()
    back = Graph.from_json(text)
    assert back.same_edges(g) and back.name == g.name
    assert back.to_json() == text
    assert Graph.from_dict({"n": 3, "edges": [[1, 0], [2, 1]]}).edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("bad", [
    "not json",
    '{"edges": []}',
    '{"n": 2, "edges": [[0, 1], [1, 0]]}',
    '{"n": 2, "edges": [[0, 0]]}',
    '{"n": 2, "edges": [[0, 5]]}',
    '{"n": 2, "edges": [[0]]}',
])
def test_json_rejects(bad):
    with pytest.raises(InputError):
        Graph.from_json(bad)


def test_product_distance_exhaustive(small_connected):
    tiny = [g for g in small_connected if g.n <= 4]
    dms = {id(g): distance_matrix(g) for g in small_connected}
    for g in small_connected:
        for h in tiny:
            dp = distance_matrix(cartesian_product(g, h)).dist
            expected = dms[id(g)].dist[:, None, :, None] + dms[id(h)].dist[None, :, None, :]
            assert (dp == expected.reshape(g.n * h.n, g.n * h.n)).all()
