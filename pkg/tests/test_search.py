import time

import networkx as nx
import numpy as np
import pytest

from longref.errors import BudgetExceededError
from longref.formats.graph6 import parse_graph6
from longref.graph import (
    build_graph,
    cycle_graph,
    from_networkx,
    is_connected,
    path_graph,
    permute,
    to_networkx,
)
from longref.search.canonical import canonical_form, canonical_labelling, certificate, is_isomorphic
from longref.search.enumerate import (
    SearchBudget,
    SearchSpec,
    cut_vertices,
    enumerate_graphs,
    frontier,
    grow,
    is_canonical_child,
)
from longref.search.oracle import MAX_ORACLE_ORDER, brute_force_enumerate
from longref.search.search import cross_validate, find_long_refinement
from longref.strings import realize


def _forms(graphs):
    return {canonical_form(g).graph6 for g in graphs}


def _random(n, p, seed):
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))


@pytest.mark.parametrize("seed", range(20))
def test_canonical_form_is_invariant(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 16))
    g = _random(n, float(rng.choice([0.2, 0.5])), seed)
    h = permute(g, rng.permutation(n).tolist())
    assert canonical_form(g) == canonical_form(h)
    assert parse_graph6(canonical_form(g).graph6).m == g.m
    label, _ = canonical_labelling(g)
    assert sorted(label) == list(range(n))


@pytest.mark.parametrize("seed", range(30))
def test_is_isomorphic_matches_networkx(seed):
    rng = np.random.default_rng(100 + seed)
    n = int(rng.integers(3, 9))
    g = _random(n, 0.4, seed)
    h = _random(n, 0.4, seed + 1000)
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_networkx(g), to_networkx(h))


def test_canonical_form_regular_graphs():
    petersen = from_networkx(nx.petersen_graph())
    relabelled = permute(petersen, [3, 7, 1, 9, 0, 2, 8, 4, 6, 5])
    assert canonical_form(petersen) == canonical_form(relabelled)
    assert not is_isomorphic(cycle_graph(6), build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    assert canonical_form(build_graph(0, [])).graph6 == "?"


def test_certificate_respects_colouring():
    g = path_graph(3)
    assert certificate(g, [0, 1, 0]) != certificate(g, [1, 0, 1])
    assert certificate(g, [0, 1, 0]) == certificate(g, [5, 7, 5])


@pytest.mark.parametrize("seed", range(15))
def test_cut_vertices_match_networkx(seed):
    g = _random(12, 0.2, seed)
    assert cut_vertices(g) == set(nx.articulation_points(to_networkx(g)))


def test_search_spec():
    spec = SearchSpec(n=5, degrees=(3, 2, 3))
    assert spec.degrees == (2, 3) and spec.max_degree == 3
    assert spec.feasible(0, 2) and not spec.feasible(0, 1)
    assert spec.admits(cycle_graph(5)) and not spec.admits(path_graph(5))
    with pytest.raises(ValueError):
        SearchSpec(n=0, degrees=(1,))
    with pytest.raises(ValueError):
        SearchSpec(n=3, degrees=(0, 1))
    assert SearchSpec(n=3, degrees=(0, 1), connected=False).degrees == (0, 1)


def test_enumerate_connected_order_four():
    graphs = list(enumerate_graphs(SearchSpec(n=4, degrees=(1, 2, 3))))
    assert len(graphs) == 6
    assert len(_forms(graphs)) == 6
    assert all(is_connected(g) for g in graphs)


def test_is_canonical_child_single_vertex():
    assert is_canonical_child(build_graph(1, []))
    # the path's midpoint is a cut vertex
    assert not is_canonical_child(build_graph(3, [(0, 2), (1, 2)]))


def _oracle_cases(max_n):
    for n in range(2, max_n + 1):
        for max_degree in (2, 3, 4):
            for connected in (True, False):
                yield pytest.param(n, max_degree, connected, id=f"n{n}-d{max_degree}-{'c' if connected else 'all'}")


def _check_oracle(n, max_degree, connected):
    low = 1 if connected else 0
    spec = SearchSpec(n=n, degrees=tuple(range(low, max_degree + 1)), connected=connected)
    found = list(enumerate_graphs(spec))
    expected = brute_force_enumerate(n, max_degree, connected)
    assert len(found) == len(expected)
    assert _forms(found) == _forms(expected)


@pytest.mark.parametrize("n, max_degree, connected", list(_oracle_cases(6)))
def test_enumeration_matches_oracle(n, max_degree, connected):
    _check_oracle(n, max_degree, connected)


@pytest.mark.slow
@pytest.mark.parametrize("max_degree", [2, 3, 4])
@pytest.mark.parametrize("connected", [True, False])
def test_enumeration_matches_oracle_order_seven(max_degree, connected):
    _check_oracle(MAX_ORACLE_ORDER, max_degree, connected)


def test_oracle_counts():
    assert len(brute_force_enumerate(4, 3)) == 6
    assert len(brute_force_enumerate(4, 3, connected=False)) == 11
    assert len(brute_force_enumerate(5, 4)) == 21
    with pytest.raises(ValueError):
        brute_force_enumerate(8, 3)


def test_frontier_partitions_search():
    spec = SearchSpec(n=7, degrees=(1, 2, 3))
    whole = _forms(enumerate_graphs(spec))
    parts = []
    for root in frontier(spec, 4):
        parts.extend(grow(root, spec))
    assert len(parts) == len(whole)
    assert _forms(parts) == whole


@pytest.mark.parametrize("n", range(2, 9))
def test_no_small_long_refinement_graphs(n):
    assert find_long_refinement(SearchSpec(n=n, degrees=(2, 3))) == []


def test_budget_exceeded_keeps_partial():
    budget = SearchBudget(max_nodes=5)
    with pytest.raises(BudgetExceededError) as exc:
        find_long_refinement(SearchSpec(n=8, degrees=(1, 2, 3)), budget)
    assert exc.value.partial == []
    assert budget.nodes == 6


def test_budget_deadline():
    budget = SearchBudget(max_seconds=2.0)
    assert budget.deadline == pytest.approx(budget.started + 2.0)
    assert not budget.expired()
    assert SearchBudget(deadline=time.monotonic() - 1.0).expired()
    assert SearchBudget().deadline is None


def test_parallel_search_stops_at_deadline():
    budget = SearchBudget(max_seconds=0.5)
    start = time.monotonic()
    with pytest.raises(BudgetExceededError) as exc:
        find_long_refinement(
            SearchSpec(n=9, degrees=(1, 2, 3, 4)),
            budget,
            max_workers=2,
            parallelism_strategy="thread",
        )
    assert time.monotonic() - start < 3.0
    assert exc.value.partial is not None


def test_parallel_search_matches_serial():
    spec = SearchSpec(n=7, degrees=(1, 2, 3))
    serial = find_long_refinement(spec)
    threaded = find_long_refinement(spec, max_workers=2, parallelism_strategy="thread", split_level=4)
    assert [h.canonical for h in serial] == [h.canonical for h in threaded]


def test_cross_validate_small_orders():
    report = cross_validate(range(2, 8), (2, 3))
    assert report.equal
    assert [job.orders for job in report.jobs] == [[n] for n in range(2, 8)]
    assert all(job.found == [] and job.expected == [] for job in report.jobs)


@pytest.mark.slow
@pytest.mark.parametrize("n, string", [(11, "S0X1X_2"), (12, "S011XX")])
def test_search_finds_string_graphs(n, string):
    hits = find_long_refinement(SearchSpec(n=n, degrees=(2, 3)))
    assert [h.canonical for h in hits] == [canonical_form(realize(string).graph).graph6]


@pytest.mark.slow
def test_cross_validate_order_ten():
    for degrees in ((1, 2), (1, 3), (1, 4), (2, 4), (3, 4)):
        report = cross_validate([10], degrees, max_workers=4)
        assert report.equal, report.model_dump_json()


@pytest.mark.slow
def test_cross_validate_deg23():
    assert cross_validate(range(2, 13), (2, 3), max_workers=4).equal
