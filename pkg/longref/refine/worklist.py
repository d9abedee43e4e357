from collections import Counter, defaultdict
from typing import Optional

from longref.graph import Graph
from longref.refine.base import Refiner, initial_colouring, split_records
from longref.structs import Colouring, RefinementTrace


def refine_fast(g: Graph, initial: Optional[Colouring] = None) -> RefinementTrace:
    """Round-synchronous smaller-half refinement.

    Round i+1 only counts neighbours in the children of the classes that split in
    round i, skipping the largest child of each. The largest child's count is
    implied by the parent's, so the partitions match the naive engine round for
    round while each vertex is re-scanned O(log n) times.

    Recorded colourings are numbered the way ``refine_step`` numbers them: classes
    keep the order of their parents and siblings are ranked by their neighbour
    colour counts under the previous colouring.
    """
    start = initial_colouring(g, initial)
    colour = list(start.colour)
    classes = [list(c) for c in start.classes()]
    trace = RefinementTrace(partitions=[start])

    # the first round needs counts into every class of pi^0
    splitters = list(range(len(classes)))
    while splitters:
        counts: dict[int, dict[int, int]] = defaultdict(dict)
        for s in splitters:
            for u in classes[s]:
                for v in g.adjacency[u]:
                    row = counts[v]
                    row[s] = row.get(s, 0) + 1

        pending: list[tuple[int, list[list[int]]]] = []
        for cid in sorted({colour[v] for v in counts}):
            groups: dict[tuple, list[int]] = defaultdict(list)
            for v in classes[cid]:
                row = counts.get(v)
                groups[tuple(sorted(row.items())) if row else ()].append(v)
            if len(groups) > 1:
                pending.append((cid, [groups[sig] for sig in sorted(groups)]))

        if not pending:
            break

        previous = trace.partitions[-1]
        ranked: dict[int, list[list[int]]] = {}
        splitters = []
        for cid, children in pending:
            children.sort(key=lambda c: _signature(g, previous.colour, c[0]))
            ranked[previous.colour[children[0][0]]] = children
            ids = [cid]
            classes[cid] = children[0]
            for child in children[1:]:
                ids.append(len(classes))
                classes.append(child)
            for new_id, child in zip(ids, children):
                for v in child:
                    colour[v] = new_id
            largest = max(range(len(children)), key=lambda i: len(children[i]))
            splitters.extend(new_id for i, new_id in enumerate(ids) if i != largest)

        current = _renumber(previous, ranked)
        trace.splits.append(split_records(previous, current))
        trace.partitions.append(current)

    return trace


def _signature(g: Graph, colour: tuple[int, ...], v: int) -> tuple:
    return tuple(sorted(Counter(colour[u] for u in g.adjacency[v]).items()))


def _renumber(previous: Colouring, ranked: dict[int, list[list[int]]]) -> Colouring:
    canon = [0] * len(previous)
    k = 0
    for c, members in enumerate(previous.classes()):
        for child in ranked.get(c, [members]):
            for v in child:
                canon[v] = k
            k += 1
    return Colouring(colour=tuple(canon), k=k)


class WorklistRefiner(Refiner):
    class Config(Refiner.Config):
        pass

    def run(self, g: Graph, initial: Optional[Colouring] = None) -> RefinementTrace:
        return refine_fast(g, initial)
