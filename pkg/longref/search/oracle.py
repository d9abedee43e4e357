"""Brute-force labelled enumeration with isomorphism rejection.

Independent of the augmentation search: every labelled graph on n vertices is an
edge bitmask, and each isomorphism class is represented by its smallest mask.
Masks are visited in increasing order; the first unseen mask of a class marks its
whole orbit under all n! relabellings. Usable up to n = 7.
"""
from __future__ import annotations

import itertools

import numpy as np

from longref.graph import Graph, build_graph, is_connected

MAX_ORACLE_ORDER = 7


def _edge_maps(n: int) -> tuple[list[tuple[int, int]], np.ndarray]:
    """Edges in combination order and, per permutation, the image index of each edge."""
    edges = list(itertools.combinations(range(n), 2))
    if not edges:
        return edges, np.zeros((1, 0), dtype=np.int64)
    index = np.full((n, n), -1, dtype=np.int64)
    for e, (i, j) in enumerate(edges):
        index[i, j] = index[j, i] = e
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    ends = np.array(edges, dtype=np.int64)
    mapped = perms[:, ends]
    return edges, index[mapped[..., 0], mapped[..., 1]]


def _max_degrees(n: int, edges: list[tuple[int, int]], masks: np.ndarray) -> np.ndarray:
    degrees = np.zeros((n, len(masks)), dtype=np.int64)
    for e, (i, j) in enumerate(edges):
        bit = (masks >> e) & 1
        degrees[i] += bit
        degrees[j] += bit
    return degrees.max(axis=0) if n else np.zeros(len(masks), dtype=np.int64)


def brute_force_enumerate(n: int, max_degree: int, connected: bool = True) -> list[Graph]:
    """One graph per isomorphism class of n-vertex graphs with max degree <= ``max_degree``."""
    if n > MAX_ORACLE_ORDER:
        raise ValueError(f"brute-force oracle supports n <= {MAX_ORACLE_ORDER}, got {n}")
    if n == 0:
        return [build_graph(0, [])]
    edges, edge_map = _edge_maps(n)
    masks = np.arange(1 << len(edges), dtype=np.int64)
    candidates = masks[_max_degrees(n, edges, masks) <= max_degree]

    seen = np.zeros(1 << len(edges), dtype=bool)
    out = []
    for mask in candidates.tolist():
        if seen[mask]:
            continue
        on = [e for e in range(len(edges)) if mask >> e & 1]
        images = np.left_shift(1, edge_map[:, on]).sum(axis=1) if on else np.zeros(1, dtype=np.int64)
        seen[images] = True
        g = build_graph(n, [edges[e] for e in on])
        if connected and not is_connected(g):
            continue
        out.append(g)
    return out
