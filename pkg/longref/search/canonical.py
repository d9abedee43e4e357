"""Canonical labelling by individualization-refinement.

The search tree individualizes one vertex of the first non-singleton cell at each
level and refines with Colour Refinement. Every leaf is a discrete colouring,
read as a relabelling; the canonical form is the relabelled graph with the
smallest adjacency certificate over all leaves.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from longref.formats.graph6 import write_graph6
from longref.graph import Graph, permute
from longref.refine import stable_colouring
from longref.structs import Colouring

Certificate = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    graph6: str
    labelling: tuple[int, ...]
    certificate: Certificate

    def __str__(self) -> str:
        return self.graph6

    def __eq__(self, other) -> bool:
        if not isinstance(other, CanonicalForm):
            return NotImplemented
        return self.graph6 == other.graph6

    def __hash__(self) -> int:
        return hash(self.graph6)


def _refine(g: Graph, values: Sequence) -> list[int]:
    return list(stable_colouring(g, Colouring.from_values(values)).colour)


def _certificate(g: Graph, label: Sequence[int]) -> Certificate:
    rows: list[tuple[int, ...]] = [()] * g.n
    for v, nbrs in enumerate(g.adjacency):
        rows[label[v]] = tuple(sorted(label[u] for u in nbrs))
    return tuple(rows)


def _twin_representatives(g: Graph, cell: list[int]) -> list[int]:
    """One vertex per twin class of ``cell``; swapping twins is an automorphism."""
    reps: list[int] = []
    for v in cell:
        nv = set(g.adjacency[v])
        if not any(nv - {u} == set(g.adjacency[u]) - {v} for u in reps):
            reps.append(v)
    return reps


def _search(g: Graph, colour: list[int], best: list) -> None:
    n = g.n
    sizes: dict[int, int] = {}
    for c in colour:
        sizes[c] = sizes.get(c, 0) + 1
    if len(sizes) == n:
        cert = _certificate(g, colour)
        if best[0] is None or cert < best[0]:
            best[0], best[1] = cert, tuple(colour)
        return

    target = min(c for c, s in sizes.items() if s > 1)
    cell = [v for v in range(n) if colour[v] == target]
    for v in _twin_representatives(g, cell):
        values = [2 * c + (c == target and w != v) for w, c in enumerate(colour)]
        _search(g, _refine(g, values), best)


def canonical_labelling(g: Graph, colouring: Optional[Sequence[int]] = None) -> tuple[tuple[int, ...], Certificate]:
    """(label, certificate) where label[v] is v's canonical position.

    With ``colouring`` the labelling is canonical for the vertex-coloured graph
    (colours compared up to order-preserving renaming) and the certificate starts
    with the colour of each position.
    """
    if g.n == 0:
        return (), ()
    start = Colouring.from_values(colouring if colouring is not None else [0] * g.n)
    best: list = [None, None]
    _search(g, _refine(g, start.colour), best)
    if colouring is None:
        return best[1], best[0]
    # labels respect the initial colour order
    return best[1], (tuple(sorted(start.colour)), *best[0])


def canonical_form(g: Graph, colouring: Optional[Sequence[int]] = None) -> CanonicalForm:
    label, cert = canonical_labelling(g, colouring)
    return CanonicalForm(
        graph6=write_graph6(permute(g, label)) if g.n else write_graph6(g),
        labelling=label,
        certificate=cert,
    )


def certificate(g: Graph, colouring: Optional[Sequence[int]] = None) -> Certificate:
    return canonical_labelling(g, colouring)[1]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
