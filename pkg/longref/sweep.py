"""No pair of graphs is first told apart by Colour Refinement in iteration n - 1.

The sweep runs the joint refinement on equal-order pairs of catalog graphs and on
random equal-order pairs, and records every pair distinguished exactly in
iteration n - 1.
"""
from __future__ import annotations

import concurrent.futures
import itertools
import json
from pathlib import Path
from typing import Iterable, Literal, Optional, Sequence, Union

import numpy as np
import tqdm
from pydrantic import RunConfig

from longref.families.catalog import catalog
from longref.formats.graph6 import write_graph6
from longref.graph import Graph, build_graph
from longref.refine import distinguishing_iteration
from longref.structs import SweepResult
from longref.utils import WandBConfig, get_logger, log_summary, prepare_wandb

logger = get_logger(__name__)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    rows, cols = np.triu_indices(n, 1)
    keep = rng.random(len(rows)) < p
    return build_graph(n, zip(rows[keep].tolist(), cols[keep].tolist()))


def random_pairs(
    count: int,
    seed: int = 0,
    orders: Sequence[int] = tuple(range(3, 21)),
    probabilities: Sequence[float] = (0.1, 0.3, 0.5),
) -> list[tuple[Graph, Graph]]:
    rng = np.random.default_rng(seed)
    pairs = []
    for _ in range(count):
        n = int(rng.choice(orders))
        p = float(rng.choice(probabilities))
        pairs.append((random_graph(n, p, rng), random_graph(n, p, rng)))
    return pairs


def equal_order_pairs(graphs: Iterable[Graph]) -> list[tuple[Graph, Graph]]:
    by_order: dict[int, list[Graph]] = {}
    for g in graphs:
        by_order.setdefault(g.n, []).append(g)
    return [
        pair
        for n in sorted(by_order)
        for pair in itertools.combinations(by_order[n], 2)
    ]


def is_last_iteration(g: Graph, h: Graph, iteration: Optional[int]) -> bool:
    """Distinguished only in iteration n - 1, n the larger order; impossible for n >= 3."""
    n = max(g.n, h.n)
    return iteration is not None and n >= 3 and iteration == n - 1


def distinguish_sweep(
    pairs: Sequence[tuple[Graph, Graph]],
    max_workers: int = 0,
    parallelism_strategy: Literal["thread", "process"] = "process",
) -> SweepResult:
    results: list[Optional[int]] = [None] * len(pairs)
    if max_workers > 1:
        with (
            concurrent.futures.ThreadPoolExecutor
            if parallelism_strategy == "thread"
            else concurrent.futures.ProcessPoolExecutor
        )(max_workers=max_workers) as executor:
            futures = {executor.submit(distinguishing_iteration, g, h): i for i, (g, h) in enumerate(pairs)}
            for future in tqdm.tqdm(
                concurrent.futures.as_completed(futures), total=len(futures), desc="Sweeping pairs"
            ):
                results[futures[future]] = future.result()
    else:
        for i, (g, h) in enumerate(tqdm.tqdm(pairs, desc="Sweeping pairs")):
            results[i] = distinguishing_iteration(g, h)

    violations = []
    for (g, h), it in zip(pairs, results):
        if is_last_iteration(g, h, it):
            violations.append((write_graph6(g), write_graph6(h), it))
    distinguished = sum(r is not None for r in results)
    return SweepResult(
        pairs=len(pairs),
        distinguished=distinguished,
        equivalent=len(pairs) - distinguished,
        violations=violations,
    )


class DistinguishSweepConfig(RunConfig):
    name: Optional[str] = "distinguish_sweep"

    max_order: int = 40
    num_random_pairs: int = 500
    seed: int = 0

    max_workers: int = 0
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

        graphs = [entry.graph for entry in catalog(1, self.max_order)]
        pairs = equal_order_pairs(graphs) + random_pairs(self.num_random_pairs, self.seed)
        logger.info(f"Sweeping {len(pairs)} pairs ({len(graphs)} catalog graphs)")
        result = distinguish_sweep(pairs, self.max_workers, self.parallelism_strategy)

        with open(self.run_dir / "sweep.json", "w") as f:
            json.dump(result.to_dict(), f, indent=2)
        if result.violations:
            logger.error(f"{len(result.violations)} pairs distinguished in the last iteration")
        else:
            logger.info(
                f"No violations: {result.distinguished} distinguished, {result.equivalent} equivalent"
            )
        if self.wandb is not None:
            log_summary(result.to_dict())
        return result
