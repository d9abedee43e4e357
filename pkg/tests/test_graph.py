import networkx as nx
import pytest

from longref.errors import GraphError
from longref.graph import (
    add_edge,
    add_vertex,
    build_graph,
    complement,
    complete_graph,
    cycle_graph,
    degree_set,
    disjoint_union,
    empty_graph,
    from_networkx,
    induced_subgraph,
    is_connected,
    path_graph,
    permute,
    remove_edge,
    star_graph,
    to_networkx,
)


def test_build_graph_normalizes_adjacency():
    g = build_graph(4, [(2, 0), (0, 1), (3, 2)])
    assert g.adjacency == ((1, 2), (0,), (0, 3), (2,))
    assert g.m == 3
    assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]


@pytest.mark.parametrize(
    "edges",
    [
        [(0, 0)],
        [(0, 3)],
        [(0, 1), (1, 0)],
    ],
)
def test_build_graph_rejects(edges):
    with pytest.raises(GraphError) as exc:
        build_graph(3, edges)
    assert exc.value.pair is not None


def test_negative_order():
    with pytest.raises(GraphError):
        build_graph(-1, [])


def test_degree_set():
    assert degree_set(path_graph(5)) == (1, 2)
    assert degree_set(cycle_graph(6)) == (2,)
    assert degree_set(star_graph(3)) == (1, 3)
    assert degree_set(build_graph(0, [])) == ()


def test_complement_and_union():
    g = path_graph(4)
    c = complement(g)
    assert c.m == 6 - 3
    assert complement(c) == g
    u = disjoint_union(cycle_graph(3), cycle_graph(3))
    assert u.n == 6 and not is_connected(u)
    assert is_connected(cycle_graph(6))
    assert is_connected(build_graph(1, []))
    assert is_connected(build_graph(0, []))
    assert not is_connected(empty_graph(2))


def test_permute_matches_networkx():
    g = cycle_graph(5)
    h = permute(g, [2, 0, 4, 1, 3])
    assert nx.is_isomorphic(to_networkx(g), to_networkx(h))
    with pytest.raises(GraphError):
        permute(g, [0, 0, 1, 2, 3])


def test_edits():
    g = path_graph(3)
    g2 = add_edge(g, 0, 2)
    assert g2 == cycle_graph(3)
    assert remove_edge(g2, 0, 2) == g
    with pytest.raises(GraphError):
        add_edge(g, 0, 1)
    with pytest.raises(GraphError):
        remove_edge(g, 0, 2)
    h = add_vertex(g, [0, 2])
    assert h.n == 4 and h.adjacency[3] == (0, 2)


def test_induced_subgraph():
    g = complete_graph(5)
    h = induced_subgraph(g, [4, 1, 2])
    assert h == complete_graph(3)
    with pytest.raises(GraphError):
        induced_subgraph(g, [1, 1])


def test_networkx_bridge():
    h = nx.petersen_graph()
    g = from_networkx(h)
    assert g.n == 10 and g.m == 15 and degree_set(g) == (3,)
    assert nx.is_isomorphic(to_networkx(g), h)
