from __future__ import annotations

import concurrent.futures
import json
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Optional, Sequence, Union

import tqdm
from pydantic import Field
from pydrantic import BaseConfig, RunConfig

from longref.errors import BudgetExceededError
from longref.formats.graph6 import parse_graph6, write_graph6
from longref.graph import Graph, degree_set
from longref.refine import is_long_refinement
from longref.search.canonical import canonical_form
from longref.search.enumerate import SearchBudget, SearchSpec, frontier, grow
from longref.structs import CrossValidationJob, CrossValidationReport
from longref.utils import WandBConfig, default_max_workers, get_logger, log_summary, prepare_wandb

logger = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class SearchHit:
    graph: Graph
    canonical: str

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def degrees(self) -> tuple[int, ...]:
        return degree_set(self.graph)


def _is_hit(g: Graph, spec: SearchSpec) -> bool:
    return len(degree_set(g)) == 2 and spec.admits(g) and is_long_refinement(g)


def _hit(g: Graph) -> SearchHit:
    return SearchHit(graph=g, canonical=canonical_form(g).graph6)


def _search_subtree(
    root: str,
    spec: SearchSpec,
    max_nodes: Optional[int],
    deadline: Optional[float],
) -> tuple[list[str], int]:
    """Worker entry point: graph6 of the hits below ``root`` and the node count."""
    budget = SearchBudget(max_nodes=max_nodes, deadline=deadline)
    g = parse_graph6(root)
    hits = [write_graph6(h) for h in grow(g, spec, budget) if _is_hit(h, spec)]
    return hits, budget.nodes


def find_long_refinement(
    spec: SearchSpec,
    budget: Optional[SearchBudget] = None,
    max_workers: int = 0,
    parallelism_strategy: Literal["thread", "process"] = "process",
    split_level: int = 6,
) -> list[SearchHit]:
    """Every long-refinement graph of order spec.n with exactly two degrees, both in spec.degrees.

    With ``max_workers`` > 1 the subtrees below the nodes on ``split_level``
    vertices are searched in parallel, every worker against the budget's
    deadline. Hits are sorted by canonical form.
    Raises BudgetExceededError carrying the hits found so far.
    """
    budget = budget if budget is not None else SearchBudget()
    hits: list[SearchHit] = []
    try:
        if max_workers > 1 and spec.n > split_level:
            roots = frontier(spec, split_level, budget)
            logger.info(f"n={spec.n}: {len(roots)} subtrees at level {split_level}")
            with (
                concurrent.futures.ThreadPoolExecutor
                if parallelism_strategy == "thread"
                else concurrent.futures.ProcessPoolExecutor
            )(max_workers=max_workers) as executor:
                futures = [
                    executor.submit(
                        _search_subtree,
                        write_graph6(root),
                        spec,
                        budget.max_nodes,
                        budget.deadline,
                    )
                    for root in roots
                ]
                try:
                    for future in tqdm.tqdm(
                        concurrent.futures.as_completed(futures),
                        total=len(futures),
                        desc=f"Searching n={spec.n}",
                    ):
                        found, nodes = future.result()
                        budget.nodes += nodes
                        hits.extend(_hit(parse_graph6(s)) for s in found)
                        if budget.max_nodes is not None and budget.nodes > budget.max_nodes:
                            raise BudgetExceededError(f"search exceeded {budget.max_nodes} nodes")
                        if budget.expired():
                            raise BudgetExceededError(
                                f"search ran past its deadline after {budget.nodes} nodes"
                            )
                except BudgetExceededError:
                    # running workers stop at the shared deadline or their node limit
                    executor.shutdown(wait=False, cancel_futures=True)
                    raise
        else:
            for g in grow(Graph(n=0, adjacency=()), spec, budget):
                if _is_hit(g, spec):
                    hits.append(_hit(g))
    except BudgetExceededError as e:
        hits.sort(key=lambda h: h.canonical)
        raise BudgetExceededError(str(e), partial=hits) from e

    hits.sort(key=lambda h: h.canonical)
    logger.info(f"n={spec.n}, degrees {spec.degrees}: {len(hits)} long-refinement graphs, {budget.nodes} nodes")
    return hits


def cross_validate(
    orders: Sequence[int],
    degrees: Sequence[int],
    max_nodes: Optional[int] = None,
    max_seconds: Optional[float] = None,
    max_workers: int = 0,
    parallelism_strategy: Literal["thread", "process"] = "process",
) -> CrossValidationReport:
    """Compare search output with the catalog, order by order, as sets of canonical forms."""
    # deferred: the catalog module imports the canonical form from this package
    from longref.families.catalog import catalog

    degrees = tuple(sorted(set(degrees)))
    jobs = []
    for n in tqdm.tqdm(list(orders), desc=f"Cross-validating {degrees}"):
        t0 = time.monotonic()
        budget = SearchBudget(max_nodes=max_nodes, max_seconds=max_seconds)
        hits = find_long_refinement(
            SearchSpec(n=n, degrees=degrees),
            budget,
            max_workers=max_workers,
            parallelism_strategy=parallelism_strategy,
        )
        found = sorted({h.canonical for h in hits})
        expected = sorted(
            {canonical_form(e.graph).graph6 for e in catalog(n, n, degrees, subset=True)}
        )
        job = CrossValidationJob(
            degrees=list(degrees),
            orders=[n],
            found=found,
            expected=expected,
            missing_from_search=sorted(set(expected) - set(found)),
            missing_from_catalog=sorted(set(found) - set(expected)),
            nodes=budget.nodes,
            seconds=time.monotonic() - t0,
        )
        if not job.equal:
            logger.warning(
                f"n={n}, degrees {degrees}: search and catalog differ "
                f"(missing from search {job.missing_from_search}, "
                f"missing from catalog {job.missing_from_catalog})"
            )
        jobs.append(job)
    return CrossValidationReport(jobs=jobs)


class SearchConfig(RunConfig):
    name: Optional[str] = "search"

    orders: list[int]
    degrees: list[int]
    connected: bool = True

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None

    max_workers: int = Field(default_factory=default_max_workers)
    parallelism_strategy: Literal["thread", "process"] = "process"
    split_level: int = 6

    wandb: Optional[WandBConfig] = None
    run_dir: Optional[Union[Path, str]] = None

    def run(self):
        assert self.run_dir is not None
        self.run_dir = Path(self.run_dir)
        self.run_dir.mkdir(parents=True, exist_ok=True)
        if self.wandb is not None:
            self.wandb.name = self.name
            prepare_wandb(self.wandb, self.to_dict())

        counts = {}
        for n in self.orders:
            spec = SearchSpec(n=n, degrees=tuple(self.degrees), connected=self.connected)
            budget = SearchBudget(max_nodes=self.max_nodes, max_seconds=self.max_seconds)
            hits = find_long_refinement(
                spec,
                budget,
                max_workers=self.max_workers,
                parallelism_strategy=self.parallelism_strategy,
                split_level=self.split_level,
            )
            path = self.run_dir / f"long_refinement_n{n}.g6"
            with open(path, "w") as f:
                for hit in hits:
                    f.write(hit.canonical + "\n")
            counts[str(n)] = {"graphs": len(hits), "nodes": budget.nodes}
            logger.info(f"n={n}: wrote {len(hits)} graphs to {path}")

        with open(self.run_dir / "summary.json", "w") as f:
            json.dump(counts, f, indent=2)
        if self.wandb is not None:
            log_summary(counts)
        return counts


class CrossValidationTarget(BaseConfig):
    orders: list[int]
    degrees: list[int]


class CrossValidateConfig(RunConfig):
    name: Optional[str] = "cross_validate"

    targets: list[CrossValidationTarget]

    max_nodes: Optional[int] = None
    max_seconds: Optional[float] = None
    max_workers: int = Field(default_factory=default_max_workers)
    parallelism_strategy: Literal["thread", "process"] = "process"

    wandb: Optional[WandBConfig] = None
    run_dir: Optional[Union[Path, str]] = None

    def run(self):
        assert self.run_dir is not None
        self.run_dir = Path(self.run_dir)
        self.run_dir.mkdir(parents=True, exist_ok=True)
        if self.wandb is not None:
            self.wandb.name = self.name
            prepare_wandb(self.wandb, self.to_dict())

        jobs = []
        for target in self.targets:
            report = cross_validate(
                target.orders,
                target.degrees,
                max_nodes=self.max_nodes,
                max_seconds=self.max_seconds,
                max_workers=self.max_workers,
                parallelism_strategy=self.parallelism_strategy,
            )
            jobs.extend(report.jobs)
        report = CrossValidationReport(jobs=jobs)

        path = self.run_dir / "cross_validation.json"
        with open(path, "w") as f:
            f.write(report.model_dump_json(indent=2))
        mismatches = [job for job in jobs if not job.equal]
        logger.info(f"{len(jobs)} jobs, {len(mismatches)} mismatches, report at {path}")

        if self.wandb is not None:
            log_summary({
                "jobs": len(jobs),
                "mismatches": len(mismatches),
                "graphs": sum(len(job.found) for job in jobs),
            })
        return report
