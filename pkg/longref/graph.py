from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx

from longref.errors import GraphError


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Attrs:
        n: vertex count
        adjacency: per-vertex neighbour tuples, sorted ascending and symmetric
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _from_neighbour_sets(n: int, nbrs: Sequence[Iterable[int]]) -> Graph:
    return Graph(n=n, adjacency=tuple(tuple(sorted(s)) for s in nbrs))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop at vertex {u}", pair=(u, v))
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}", pair=(u, v))
        if v in nbrs[u]:
            raise GraphError(f"duplicate edge ({u}, {v})", pair=(u, v))
        nbrs[u].add(v)
        nbrs[v].add(u)
    return _from_neighbour_sets(n, nbrs)


def degree_set(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(set(g.degrees())))


def complement(g: Graph) -> Graph:
    everything = set(range(g.n))
    return _from_neighbour_sets(
        g.n, [everything - set(nbrs) - {v} for v, nbrs in enumerate(g.adjacency)]
    )


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [tuple(u + g.n for u in nbrs) for nbrs in h.adjacency]
    return Graph(n=g.n + h.n, adjacency=g.adjacency + tuple(shifted))


def is_connected(g: Graph) -> bool:
    """The null graph counts as connected."""
    if g.n == 0:
        return True
    return nx.is_connected(to_networkx(g))


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """Relabel vertex v as perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError(f"not a permutation of 0..{g.n - 1}: {list(perm)}")
    nbrs: list[list[int]] = [[] for _ in range(g.n)]
    for v, row in enumerate(g.adjacency):
        nbrs[perm[v]] = [perm[u] for u in row]
    return _from_neighbour_sets(g.n, nbrs)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices``, relabelled 0..k-1 in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise GraphError("induced_subgraph vertices must be distinct")
    return _from_neighbour_sets(
        len(vertices),
        [[index[u] for u in g.adjacency[v] if u in index] for v in vertices],
    )


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if g.has_edge(u, v):
        raise GraphError(f"duplicate edge ({u}, {v})", pair=(u, v))
    return build_graph(g.n, [*g.edges(), (u, v)])


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"no edge ({u}, {v}) to remove", pair=(u, v))
    drop = {(min(u, v), max(u, v))}
    return build_graph(g.n, [e for e in g.edges() if e not in drop])


def add_vertex(g: Graph, neighbours: Iterable[int]) -> Graph:
    """Append vertex g.n joined to ``neighbours``."""
    return build_graph(g.n + 1, [*g.edges(), *((u, g.n) for u in neighbours)])


# constructors

def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for j in range(n) for i in range(j)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre at vertex 0."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# networkx bridges

def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def from_networkx(h: nx.Graph) -> Graph:
    """Convert with nodes relabelled 0..n-1 in sorted order."""
    nodes = sorted(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(index[u], index[v]) for u, v in h.edges()])
