"""Constructions outside the string and table families: degree-1 pendants and ladders."""
from __future__ import annotations

from typing import Optional, Sequence, Union

from longref.graph import Graph, add_edge, add_vertex, build_graph, degree_set
from longref.strings import RealizedGraph, realize

DEG13_BASE = "S1_211XX"


def pendant_extension(g: Union[Graph, RealizedGraph], vertex: int) -> Graph:
    """Attach a new degree-1 vertex (index n) to ``vertex``."""
    if isinstance(g, RealizedGraph):
        g = g.graph
    if not 0 <= vertex < g.n:
        raise ValueError(f"vertex {vertex} out of range for n={g.n}")
    return add_vertex(g, [vertex])


def deg13_graph() -> Graph:
    """The unique long-refinement graph with degrees {1, 3}.

    G(S1_211XX) has a single degree-2 vertex, its singleton; a pendant there
    raises it to degree 3.
    """
    realized = realize(DEG13_BASE)
    (singleton,) = realized.singleton_of.values()
    return pendant_extension(realized, singleton)


def merge_degree_one_pair(g: Graph) -> Graph:
    """Join the two degree-1 vertices of a {1,3} graph, giving a {2,3} graph."""
    if degree_set(g) != (1, 3):
        raise ValueError(f"expected degrees (1, 3), got {degree_set(g)}")
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    if len(leaves) != 2:
        raise ValueError(f"expected exactly two degree-1 vertices, found {len(leaves)}")
    u, v = leaves
    if g.has_edge(u, v):
        raise ValueError(f"degree-1 vertices {u} and {v} are adjacent")
    return add_edge(g, u, v)


def ladder_graph(
    last_pair: int,
    first: Sequence[int],
    singleton: Sequence[int],
    rungs: Sequence[int],
    bridge: Optional[Sequence[int]] = None,
) -> Graph:
    """A ladder of pairs Q_0..Q_last_pair, Q_j = (2j+1, 2j+2), plus vertex 0.

    Consecutive pairs are joined rail to rail. Vertex 1 is joined to both
    vertices of Q_first[0] and vertex 2 to both of Q_first[1]; vertex 0 to
    both vertices of each pair in ``singleton``. ``bridge`` joins two pairs
    completely and ``rungs`` lists the pairs with an inner edge.
    """
    n = 2 * last_pair + 3

    def pair(j: int) -> tuple[int, int]:
        if not 0 <= j <= last_pair:
            raise ValueError(f"pair {j} out of range 0..{last_pair}")
        return 2 * j + 1, 2 * j + 2

    edges = []
    for j in range(last_pair):
        edges += [(2 * j + 1, 2 * j + 3), (2 * j + 2, 2 * j + 4)]
    a, b = first
    edges += [(1, w) for w in pair(a)] + [(2, w) for w in pair(b)]
    edges += [(0, w) for j in singleton for w in pair(j)]
    if bridge is not None:
        x, y = bridge
        edges += [(u, w) for u in pair(x) for w in pair(y)]
    edges += [pair(j) for j in rungs]
    return build_graph(n, edges)
