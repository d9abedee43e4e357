"""Isomorph-free generation of small graphs by canonical vertex augmentation.

A graph on k+1 vertices is accepted as a child of its parent on k vertices iff
the added vertex lies in the orbit of the canonical deletion vertex: the
non-cut vertex of the last degree-refined colour class with the largest
canonical label. Every isomorphism class is then reached from exactly one parent,
and duplicates among one parent's children are dropped by canonical form.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional

from longref.errors import BudgetExceededError
from longref.graph import Graph, add_vertex, build_graph
from longref.search.canonical import canonical_form, canonical_labelling, certificate
from longref.refine import stable_colouring
from longref.structs import Colouring
from longref.utils import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class SearchSpec:
    """
    Attrs:
        n: order of the emitted graphs
        degrees: allowed degrees; emitted graphs satisfy deg(G) within it
        connected: only connected graphs
    """

    n: int
    degrees: tuple[int, ...]
    connected: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"search order must be positive, got {self.n}")
        if not self.degrees:
            raise ValueError("degree set must not be empty")
        if min(self.degrees) < (1 if self.connected else 0):
            raise ValueError(f"degrees must be positive for connected search, got {self.degrees}")
        object.__setattr__(self, "degrees", tuple(sorted(set(self.degrees))))

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    def feasible(self, degree: int, remaining: int) -> bool:
        """Some allowed degree is reachable with at most ``remaining`` more neighbours."""
        return any(degree <= d <= degree + remaining for d in self.degrees)

    def admits(self, g: Graph) -> bool:
        return all(d in self.degrees for d in g.degrees())


@dataclass(slots=True)
class SearchBudget:
    """Node and wall-clock limits for one search.

    ``deadline`` is an absolute ``time.monotonic()`` value; it defaults to
    ``started + max_seconds`` and is what parallel workers share.
    """

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    nodes: int = 0
    started: float = field(default_factory=time.monotonic)
    deadline: Optional[float] = None

    def __post_init__(self):
        if self.deadline is None and self.max_seconds is not None:
            self.deadline = self.started + self.max_seconds

    def expired(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline

    def tick(self):
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceededError(f"search exceeded {self.max_nodes} nodes")
        if self.deadline is not None and self.nodes % 64 == 0 and self.expired():
            raise BudgetExceededError(f"search ran past its deadline after {self.nodes} nodes")


def cut_vertices(g: Graph) -> set[int]:
    """Articulation points (Tarjan low-link), iterative DFS over every component."""
    disc = [-1] * g.n
    low = [0] * g.n
    cut: set[int] = set()
    clock = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            v, parent, nbrs = stack[-1]
            advanced = False
            for u in nbrs:
                if disc[u] == -1:
                    disc[u] = low[u] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, iter(g.adjacency[u])))
                    advanced = True
                    break
                if u != parent:
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cut.add(parent)
        if root_children > 1:
            cut.add(root)
    return cut


def is_canonical_child(g: Graph, connected: bool = True) -> bool:
    """Whether the last vertex is in the orbit of the canonical deletion vertex."""
    n = g.n
    v = n - 1
    if n == 1:
        return True
    cut = cut_vertices(g) if connected else set()
    if v in cut:
        return False
    colour = list(stable_colouring(g, Colouring.from_values(g.degrees())).colour)
    best = max(colour[w] for w in range(n) if w not in cut)
    if colour[v] != best:
        return False
    cls = [w for w in range(n) if colour[w] == best and w not in cut]
    if len(cls) == 1:
        return True

    label, _ = canonical_labelling(g, colour)
    vstar = max(cls, key=lambda w: label[w])
    if vstar == v:
        return True

    def pinned(x: int):
        return certificate(g, [2 * c + (w != x) for w, c in enumerate(colour)])

    return pinned(v) == pinned(vstar)


def children(g: Graph, spec: SearchSpec) -> Iterator[Graph]:
    """Accepted, pairwise non-isomorphic one-vertex extensions of ``g``."""
    k = g.n
    remaining = spec.n - k - 1
    avail = [v for v in range(k) if g.degree(v) < spec.max_degree]
    smallest = 1 if spec.connected and k > 0 else 0
    seen: set[str] = set()
    for size in range(smallest, min(spec.max_degree, len(avail)) + 1):
        for nbrs in itertools.combinations(avail, size):
            child = add_vertex(g, nbrs)
            if not all(spec.feasible(child.degree(v), remaining) for v in range(k + 1)):
                continue
            if not is_canonical_child(child, spec.connected):
                continue
            form = canonical_form(child).graph6
            if form in seen:
                continue
            seen.add(form)
            yield child


def grow(g: Graph, spec: SearchSpec, budget: Optional[SearchBudget] = None) -> Iterator[Graph]:
    """Every admitted graph of order spec.n descending from ``g``."""
    if budget is not None:
        budget.tick()
    if g.n == spec.n:
        if spec.admits(g):
            yield g
        return
    for child in children(g, spec):
        yield from grow(child, spec, budget)


def frontier(spec: SearchSpec, level: int, budget: Optional[SearchBudget] = None) -> list[Graph]:
    """All accepted nodes with ``level`` vertices; their subtrees partition the search."""
    level = min(level, spec.n)
    nodes = [build_graph(0, [])]
    for _ in range(level):
        nxt = []
        for g in nodes:
            if budget is not None:
                budget.tick()
            nxt.extend(children(g, spec))
        nodes = nxt
    return nodes


def enumerate_graphs(spec: SearchSpec, budget: Optional[SearchBudget] = None) -> Iterator[Graph]:
    """Stream every graph of order spec.n with degrees in spec.degrees once up to isomorphism.

    Raises BudgetExceededError when ``budget`` runs out.
    """
    yield from grow(build_graph(0, []), spec, budget)
