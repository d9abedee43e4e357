from collections import Counter
from typing import Optional

from longref.graph import Graph
from longref.refine.base import Refiner, initial_colouring, split_records
from longref.structs import Colouring, RefinementTrace


def refine_step(g: Graph, c: Colouring) -> Colouring:
    """One round: new colour = rank of (old colour, sorted neighbour-colour counts)."""
    c.check_covers(g.n)
    col = c.colour
    keys = [
        (col[v], tuple(sorted(Counter(col[u] for u in nbrs).items())))
        for v, nbrs in enumerate(g.adjacency)
    ]
    return Colouring.from_values(keys)


def run_colour_refinement(g: Graph, initial: Optional[Colouring] = None) -> RefinementTrace:
    current = initial_colouring(g, initial)
    trace = RefinementTrace(partitions=[current])
    while True:
        nxt = refine_step(g, current)
        if nxt.k == current.k:
            return trace
        trace.splits.append(split_records(current, nxt))
        trace.partitions.append(nxt)
        current = nxt


def stable_colouring(g: Graph, initial: Optional[Colouring] = None) -> Colouring:
    """Coarsest stable refinement of ``initial``, canonically numbered."""
    current = initial_colouring(g, initial)
    while True:
        nxt = refine_step(g, current)
        if nxt.k == current.k:
            return nxt
        current = nxt


class NaiveRefiner(Refiner):
    class Config(Refiner.Config):
        pass

    def run(self, g: Graph, initial: Optional[Colouring] = None) -> RefinementTrace:
        return run_colour_refinement(g, initial)
