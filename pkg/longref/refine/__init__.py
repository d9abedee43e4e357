from collections import Counter
from typing import Optional

from longref.graph import Graph, disjoint_union
from longref.refine.base import Refiner, initial_colouring, split_records
from longref.refine.naive import (
    NaiveRefiner,
    refine_step,
    run_colour_refinement,
    stable_colouring,
)
from longref.refine.worklist import WorklistRefiner, refine_fast
from longref.structs import Colouring
from longref.utils import get_logger

logger = get_logger(__name__)

REFINERS = {
    "naive": NaiveRefiner.Config,
    "worklist": WorklistRefiner.Config,
}


def get_refiner(name: str) -> Refiner:
    try:
        return REFINERS[name]().instantiate()
    except KeyError:
        raise ValueError(f"unknown refiner {name!r}, expected one of {sorted(REFINERS)}")


def iteration_number(g: Graph, initial: Optional[Colouring] = None) -> int:
    return refine_fast(g, initial).iteration_number


def is_long_refinement(g: Graph) -> bool:
    """WL_1(G) = |G| - 1. True for n = 1, False for n = 0."""
    if g.n == 0:
        return False
    return refine_fast(g).iteration_number == g.n - 1


def is_stable(g: Graph, colouring: Colouring) -> bool:
    """Every class induces a regular graph and every pair of classes is biregular."""
    colouring.check_covers(g.n)
    col = colouring.colour
    profile: dict[int, Counter] = {}
    for v, nbrs in enumerate(g.adjacency):
        counts = Counter(col[u] for u in nbrs)
        seen = profile.setdefault(col[v], counts)
        if seen != counts:
            return False
    return True


def colour_multiset(colouring: Colouring, vertices: range) -> Counter:
    return Counter(colouring.colour[v] for v in vertices)


def distinguishing_iteration(g: Graph, h: Graph) -> Optional[int]:
    """Least i at which joint refinement of g + h separates the colour multisets.

    Returns None when the graphs are never distinguished (Equivalent). Graphs of
    different order are distinguished at iteration 0.
    """
    if g.n != h.n:
        return 0
    union = disjoint_union(g, h)
    left, right = range(g.n), range(g.n, union.n)
    for i, colouring in enumerate(run_colour_refinement(union).partitions):
        if colour_multiset(colouring, left) != colour_multiset(colouring, right):
            return i
    return None


__all__ = [
    "Refiner",
    "NaiveRefiner",
    "WorklistRefiner",
    "REFINERS",
    "get_refiner",
    "refine_step",
    "run_colour_refinement",
    "refine_fast",
    "stable_colouring",
    "iteration_number",
    "is_long_refinement",
    "is_stable",
    "colour_multiset",
    "distinguishing_iteration",
    "initial_colouring",
    "split_records",
]
