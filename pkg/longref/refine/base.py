import abc
from typing import Optional

from pydrantic import ObjectConfig

from longref.graph import Graph
from longref.structs import Colouring, RefinementTrace, SplitRecord


class Refiner(abc.ABC):
    """A Colour Refinement engine producing the full partition sequence."""

    class Config(ObjectConfig):
        _pass_as_config: bool = True

    def __init__(self, config: Config):
        self.config = config

    @abc.abstractmethod
    def run(self, g: Graph, initial: Optional[Colouring] = None) -> RefinementTrace:
        raise NotImplementedError()

    def iteration_number(self, g: Graph, initial: Optional[Colouring] = None) -> int:
        return self.run(g, initial).iteration_number

    @property
    def name(self) -> str:
        return self.__class__.__name__


def initial_colouring(g: Graph, initial: Optional[Colouring]) -> Colouring:
    if initial is None:
        return Colouring.uniform(g.n)
    initial.check_covers(g.n)
    return Colouring.from_values(initial.colour)


def split_records(old: Colouring, new: Colouring) -> list[SplitRecord]:
    """Classes of ``old`` that ``new`` divides, children ordered by new colour."""
    children: list[dict[int, list[int]]] = [{} for _ in range(old.k)]
    for v, (c_old, c_new) in enumerate(zip(old.colour, new.colour)):
        children[c_old].setdefault(c_new, []).append(v)
    records = []
    for c_old, groups in enumerate(children):
        if len(groups) > 1:
            kids = tuple(tuple(groups[c]) for c in sorted(groups))
            parent = tuple(sorted(v for kid in kids for v in kid))
            records.append(SplitRecord(parent=parent, children=kids))
    return records
