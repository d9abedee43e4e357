from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Literal, Optional, Sequence

from pydantic import BaseModel, Field

from longref.errors import ColouringError


@dataclass(slots=True)
class Colouring:
    """Dense colouring: colour[v] in [0, k), every colour used at least once."""

    colour: tuple[int, ...]
    k: int

    @classmethod
    def from_values(cls, values: Sequence) -> Colouring:
        """Canonical colouring from arbitrary sortable labels (ranked ascending)."""
        ranks = {x: i for i, x in enumerate(sorted(set(values)))}
        return cls(colour=tuple(ranks[x] for x in values), k=len(ranks))

    @classmethod
    def uniform(cls, n: int) -> Colouring:
        return cls(colour=(0,) * n, k=1 if n > 0 else 0)

    def __len__(self) -> int:
        return len(self.colour)

    def classes(self) -> list[tuple[int, ...]]:
        """Vertex tuples indexed by colour."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colour):
            out[c].append(v)
        return [tuple(vs) for vs in out]

    def partition(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(c) for c in self.classes())

    def check_covers(self, n: int):
        if len(self.colour) != n:
            raise ColouringError(
                f"colouring has {len(self.colour)} entries but the graph has {n} vertices"
            )


@dataclass(slots=True)
class SplitRecord:
    """A class of pi^{i-1} and the classes of pi^i it splits into."""

    parent: tuple[int, ...]
    children: tuple[tuple[int, ...], ...]

    @property
    def is_binary(self) -> bool:
        return len(self.children) == 2

    @property
    def a(self) -> tuple[int, ...]:
        assert self.is_binary
        return self.children[0]

    @property
    def b(self) -> tuple[int, ...]:
        assert self.is_binary
        return self.children[1]

    def to_dict(self) -> dict:
        return {"parent": list(self.parent), "children": [list(c) for c in self.children]}


@dataclass(slots=True)
class RefinementTrace:
    """
    Attrs:
        partitions: pi^0 .. pi^j, where pi^j is the first stable partition
        splits: splits[i - 1] lists the classes of pi^{i-1} that split at iteration i
    """

    partitions: list[Colouring]
    splits: list[list[SplitRecord]] = field(default_factory=list)

    @property
    def iteration_number(self) -> int:
        return len(self.partitions) - 1

    @property
    def final(self) -> Colouring:
        return self.partitions[-1]

    def split_at(self, i: int) -> SplitRecord:
        """The unique split at iteration i (1-based); fails if it is not unique."""
        records = self.splits[i - 1]
        if len(records) != 1:
            raise ValueError(f"iteration {i} has {len(records)} splitting classes")
        return records[0]

    def same_partitions(self, other: RefinementTrace) -> bool:
        return len(self.partitions) == len(other.partitions) and all(
            a.partition() == b.partition()
            for a, b in zip(self.partitions, other.partitions)
        )


class TraceRecord(BaseModel):
    iteration: int
    num_classes: int
    classes: list[list[int]]
    split: list[dict] = Field(default_factory=list)


class PairPhase(BaseModel):
    p: int
    pair_order: list[list[int]]
    singletons: list[int]
    n_pairs: int
    a: int
    b: int
    ell: int
    t: Optional[int] = None
    q: Optional[int] = None
    c: int
    d: Optional[int] = None
    ell_prime: Optional[int] = None

    def pair(self, i: int) -> list[int]:
        """P_i, 1-based."""
        return self.pair_order[i - 1]


class CheckResult(BaseModel):
    index: int
    name: str
    status: Literal["pass", "fail", "vacuous", "skipped"]
    detail: str = ""
    witness: list[list[int]] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status in ("pass", "vacuous")


class StructureReport(BaseModel):
    checks: list[CheckResult]
    phase: Optional[PairPhase] = None

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failed(self) -> list[int]:
        return [c.index for c in self.checks if not c.ok]

    def render(self) -> str:
        lines = [f"{'#':>2}  {'check':<34} status"]
        for c in self.checks:
            line = f"{c.index:>2}  {c.name:<34} {c.status}"
            if c.status == "fail" and c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        if self.phase is not None:
            ph = self.phase
            lines.append(
                f"p={ph.p} a={ph.a} b={ph.b} ell={ph.ell} t={ph.t} d={ph.d} "
                f"q={ph.q} ell'={ph.ell_prime} pairs={ph.n_pairs}"
            )
        passed = sum(c.ok for c in self.checks)
        lines.append(f"{passed}/{len(self.checks)} checks pass")
        return "\n".join(lines)


class Provenance(BaseModel):
    kind: Literal["string", "table", "sporadic", "extension"]
    family: str
    parameter: Optional[int] = None
    variant: Optional[int] = None
    source: Optional[str] = None

    @property
    def label(self) -> str:
        parts = [self.kind, self.family]
        if self.variant is not None:
            parts.append(f"v{self.variant}")
        if self.parameter is not None:
            parts.append(f"k={self.parameter}")
        return ":".join(parts)


class CatalogRecord(BaseModel):
    graph6: str
    order: int
    degrees: list[int]
    provenance: Provenance
    expected_failures: list[int] = Field(default_factory=list)


class CrossValidationJob(BaseModel):
    degrees: list[int]
    orders: list[int]
    found: list[str] = Field(default_factory=list)
    expected: list[str] = Field(default_factory=list)
    missing_from_search: list[str] = Field(default_factory=list)
    missing_from_catalog: list[str] = Field(default_factory=list)
    nodes: int = 0
    seconds: float = 0.0

    @property
    def equal(self) -> bool:
        return not self.missing_from_search and not self.missing_from_catalog


class CrossValidationReport(BaseModel):
    jobs: list[CrossValidationJob]

    @property
    def equal(self) -> bool:
        return all(job.equal for job in self.jobs)


@dataclass(slots=True)
class SweepResult:
    pairs: int
    distinguished: int
    equivalent: int
    violations: list[tuple[str, str, int]]

    def to_dict(self) -> dict:
        return asdict(self)
