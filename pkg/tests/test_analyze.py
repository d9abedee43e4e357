import pytest

from longref.analyze import CHECK_NAMES, pair_phase, unbalanced_classes, verify_structure
from longref.errors import NotLongRefinementError
from longref.families.catalog import catalog
from longref.graph import complement, cycle_graph, path_graph
from longref.refine import run_colour_refinement
from longref.strings import FAMILIES, realize
from longref.structs import Colouring


def _family_graphs(max_k: int = 5):
    for family in FAMILIES.values():
        for k in range(max_k + 1 if family.parametric else 1):
            g = realize(family.expand(k)).graph
            yield pytest.param(family.family_id, k, g, id=f"{family.family_id}-{k}")


def test_unbalanced_classes():
    g = path_graph(4)
    unbalanced = unbalanced_classes(g, Colouring.uniform(4))
    assert len(unbalanced) == 1
    members, witnesses = unbalanced[0]
    assert members == (0, 1, 2, 3) and witnesses == [(0, 1, 2, 3)]
    assert unbalanced_classes(cycle_graph(5), Colouring.uniform(5)) == []


def test_pair_phase_s011xx():
    g = realize("S011XX").graph
    phase = pair_phase(run_colour_refinement(g), g)
    assert phase.n_pairs == 6
    assert (phase.a, phase.b) == (5, 6)
    assert phase.b - phase.a in (1, 2)
    assert phase.p + phase.n_pairs == g.n - 1
    assert phase.singletons == []


def test_pair_phase_rejects_short_trace():
    g = cycle_graph(6)
    with pytest.raises(NotLongRefinementError):
        pair_phase(run_colour_refinement(g), g)


def test_cycle_fails_first_check():
    report = verify_structure(cycle_graph(6))
    assert report.checks[0].index == 1
    assert report.checks[0].status == "fail"
    assert all(c.status == "skipped" for c in report.checks[1:])
    assert not report.passed
    assert "0/10 checks pass" in report.render()


@pytest.mark.parametrize("family, k, g", list(_family_graphs()))
def test_family_passes_every_check(family, k, g):
    report = verify_structure(g)
    assert [c.index for c in report.checks] == list(CHECK_NAMES)
    assert report.passed, report.render()
    assert report.phase.b in (report.phase.a + 1, report.phase.a + 2)


@pytest.mark.parametrize("family, k, g", list(_family_graphs(2)))
def test_complement_closure(family, k, g):
    trace = run_colour_refinement(g)
    co = complement(g)
    co_trace = run_colour_refinement(co)
    assert co_trace.iteration_number == g.n - 1
    assert co_trace.same_partitions(trace)
    assert verify_structure(co).passed


def test_catalog_complement_closure():
    entries = catalog(10, 25)
    assert {e.provenance.kind for e in entries} >= {"string", "table", "sporadic"}
    for entry in entries:
        g = entry.graph
        co_trace = run_colour_refinement(complement(g))
        assert co_trace.iteration_number == g.n - 1, entry.provenance
        assert co_trace.same_partitions(run_colour_refinement(g))


def test_report_json_roundtrip():
    report = verify_structure(realize("S011XX").graph)
    restored = type(report).model_validate_json(report.model_dump_json())
    assert restored.failed == [] and restored.phase == report.phase
    assert "10/10 checks pass" in report.render()
