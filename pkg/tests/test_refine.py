import networkx as nx
import numpy as np
import pytest

from longref.errors import ColouringError
from longref.families.catalog import catalog
from longref.graph import (
    build_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_networkx,
    path_graph,
    permute,
    star_graph,
)
from longref.refine import (
    REFINERS,
    distinguishing_iteration,
    get_refiner,
    is_long_refinement,
    is_stable,
    iteration_number,
    refine_fast,
    refine_step,
    run_colour_refinement,
    stable_colouring,
)
from longref.structs import Colouring


@pytest.mark.parametrize("n", range(2, 51))
def test_path_iteration_number(n):
    assert iteration_number(path_graph(n)) == (n - 1) // 2


@pytest.mark.parametrize(
    "g, expected",
    [
        (build_graph(0, []), 0),
        (build_graph(1, []), 0),
        (complete_graph(3), 0),
        (cycle_graph(6), 0),
        (empty_graph(4), 0),
        (star_graph(3), 1),
    ],
)
def test_small_iteration_numbers(g, expected):
    assert iteration_number(g) == expected


def test_long_refinement_trivial_orders():
    assert not is_long_refinement(build_graph(0, []))
    assert is_long_refinement(build_graph(1, []))
    assert not is_long_refinement(path_graph(2))
    assert not is_long_refinement(path_graph(3))
    assert not is_long_refinement(cycle_graph(5))


def test_trace_is_strictly_refining():
    trace = run_colour_refinement(path_graph(9))
    ks = [c.k for c in trace.partitions]
    assert ks == sorted(set(ks))
    assert len(trace.splits) == trace.iteration_number
    assert is_stable(path_graph(9), trace.final)
    assert refine_step(path_graph(9), trace.final).k == trace.final.k


def test_initial_colouring():
    g = cycle_graph(6)
    initial = Colouring.from_values([1, 0, 0, 0, 0, 0])
    assert iteration_number(g, initial) == 2
    assert stable_colouring(g, initial).k == 4
    with pytest.raises(ColouringError):
        run_colour_refinement(g, Colouring.uniform(5))


def test_is_stable():
    g = path_graph(4)
    assert not is_stable(g, Colouring.uniform(4))
    assert is_stable(g, Colouring(colour=(0, 1, 1, 0), k=2))
    assert is_stable(cycle_graph(5), Colouring.uniform(5))


def test_refiner_configs():
    assert set(REFINERS) == {"naive", "worklist"}
    for name in REFINERS:
        refiner = get_refiner(name)
        assert refiner.iteration_number(path_graph(7)) == 3
    with pytest.raises(ValueError):
        get_refiner("hopcroft")


def _random_graphs(count: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, 65))
        p = float(rng.choice([0.1, 0.3, 0.5]))
        yield from_networkx(nx.gnp_random_graph(n, p, seed=int(rng.integers(1 << 31))))


def test_engines_agree():
    for g in _random_graphs(100, seed=0):
        assert refine_fast(g).same_partitions(run_colour_refinement(g))


@pytest.mark.slow
def test_engines_agree_many():
    for g in _random_graphs(1000, seed=1):
        assert refine_fast(g).same_partitions(run_colour_refinement(g))


def test_engines_agree_with_initial_colouring():
    g = path_graph(12)
    initial = Colouring.from_values([v % 3 for v in range(12)])
    assert refine_fast(g, initial).same_partitions(run_colour_refinement(g, initial))


def test_distinguishing_iteration():
    assert distinguishing_iteration(cycle_graph(6), cycle_graph(6)) is None
    c33 = disjoint_union(cycle_graph(3), cycle_graph(3))
    assert distinguishing_iteration(cycle_graph(6), c33) is None
    assert distinguishing_iteration(path_graph(3), path_graph(4)) == 0
    assert distinguishing_iteration(path_graph(4), star_graph(3)) == 1
    assert distinguishing_iteration(complete_graph(2), empty_graph(2)) == 1


@pytest.fixture(scope="module")
def catalog_graphs():
    return [entry.graph for entry in catalog(1, 30)]


def _image(c: Colouring, perm: list[int]) -> frozenset:
    return frozenset(frozenset(perm[v] for v in cls) for cls in c.classes())


@pytest.mark.parametrize("seed", range(3))
def test_trace_follows_relabelling(catalog_graphs, seed):
    rng = np.random.default_rng(seed)
    for g in catalog_graphs + list(_random_graphs(30, seed=10 + seed)):
        perm = [int(x) for x in rng.permutation(g.n)]
        trace = run_colour_refinement(g)
        relabelled = run_colour_refinement(permute(g, perm))
        assert relabelled.iteration_number == trace.iteration_number
        for ours, theirs in zip(trace.partitions, relabelled.partitions):
            assert theirs.partition() == _image(ours, perm)


def test_engines_agree_on_catalog(catalog_graphs):
    rng = np.random.default_rng(7)
    for g in catalog_graphs:
        for h in (g, permute(g, [int(x) for x in rng.permutation(g.n)])):
            fast, naive = refine_fast(h), run_colour_refinement(h)
            assert fast.same_partitions(naive)
            assert fast.partitions == naive.partitions


def test_engines_number_colours_alike():
    for g in _random_graphs(100, seed=3):
        fast, naive = refine_fast(g), run_colour_refinement(g)
        assert [c.colour for c in fast.partitions] == [c.colour for c in naive.partitions]
        assert [[r.to_dict() for r in rs] for rs in fast.splits] == [
            [r.to_dict() for r in rs] for rs in naive.splits
        ]
    g = path_graph(12)
    initial = Colouring.from_values([v % 3 for v in range(12)])
    assert refine_fast(g, initial).partitions == run_colour_refinement(g, initial).partitions
