import io
import json
import sys

import pytest

from longref.cli import EXIT_BUDGET, EXIT_IO, EXIT_OK, EXIT_USAGE, main
from longref.formats.graph6 import parse_graph6, write_graph6
from longref.graph import cycle_graph, disjoint_union
from longref.refine import iteration_number
from longref.search.canonical import is_isomorphic
from longref.strings import realize
from longref.utils import get_logger

C6 = write_graph6(cycle_graph(6))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_refine(capsys):
    assert run(capsys, "refine", "--g6", "Bw")[:2] == (EXIT_OK, "iteration_number 0\n")
    code, out, _ = run(capsys, "refine", "--string", "S011XX")
    assert code == EXIT_OK and out == "iteration_number 11\n"
    code, out, _ = run(capsys, "refine", "--family", "even-family-2:1", "--engine", "naive", "--format", "json")
    record = json.loads(out)
    assert record["n"] == 20 and record["long_refinement"]


def test_refine_trace(capsys):
    code, out, _ = run(capsys, "refine", "--string", "S011XX", "--trace")
    lines = out.splitlines()
    assert lines[0] == "iteration_number 11"
    records = [json.loads(line) for line in lines[1:]]
    assert [r["iteration"] for r in records] == list(range(12))
    assert records[-1]["num_classes"] == 12


@pytest.mark.parametrize("source", [("--string", "S011XX"), ("--family", "odd-family-1:2"), ("--table", "3:1:1")])
def test_refine_trace_same_for_both_engines(capsys, source):
    outputs = [
        run(capsys, "refine", *source, "--engine", engine, "--trace")[1]
        for engine in ("naive", "worklist")
    ]
    assert outputs[0] == outputs[1]


def test_refine_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("Bw\n"))
    assert run(capsys, "refine", "--g6", "-")[1] == "iteration_number 0\n"


def test_refine_errors(capsys, tmp_path):
    code, _, err = run(capsys, "refine", "--file", str(tmp_path / "missing.g6"))
    assert code == EXIT_IO and "missing.g6" in err
    assert run(capsys, "refine", "--g6", "B!")[0] == EXIT_USAGE
    assert run(capsys, "refine")[0] == EXIT_USAGE
    assert run(capsys, "refine", "--g6", "Bw", "--g6", "Bw")[0] == EXIT_USAGE


def test_usage_errors_exit_one(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["refine", "--engine", "fastest", "--g6", "Bw"])
    assert exc.value.code == EXIT_USAGE
    capsys.readouterr()


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "--g6", C6)
    assert code == EXIT_OK
    assert " 1  one split, one unbalanced class" in out and "fail" in out
    code, out, _ = run(capsys, "analyze", "--string", "S1_211XX", "--format", "json")
    report = json.loads(out)
    assert all(c["status"] == "pass" or c["status"] == "vacuous" for c in report["checks"])
    assert report["phase"]["a"] == 5


def test_distinguish(capsys):
    code, out, _ = run(capsys, "distinguish", "--g6", C6, "--g6", C6)
    assert (code, out) == (EXIT_OK, "equivalent\n")
    two_triangles = write_graph6(disjoint_union(cycle_graph(3), cycle_graph(3)))
    assert run(capsys, "distinguish", "--g6", C6, "--g6", two_triangles)[1] == "equivalent\n"
    code, out, _ = run(
        capsys, "distinguish", "--string", "S011XX", "--family", "even-family-1", "--assert-not-last"
    )
    assert (code, out) == (EXIT_OK, "equivalent\n")
    code, out, _ = run(capsys, "distinguish", "--g6", "A_", "--g6", "A?", "--assert-not-last")
    assert (code, out) == (EXIT_OK, "1\n")


def test_string_commands(capsys):
    code, out, err = run(capsys, "string", "realize", "S011XX")
    assert code == EXIT_OK
    assert is_isomorphic(parse_graph6(out.strip()), realize("S011XX").graph)
    assert "10/10 checks pass" in err
    g6 = out.strip()
    assert run(capsys, "string", "extract", g6)[1] == "S011XX\n"
    assert run(capsys, "string", "extract", "--g6", g6)[1] == "S011XX\n"
    code, out, _ = run(capsys, "string", "family", "odd-family-4", "--k", "1", "--format", "string")
    assert out == "S1011XX11_2\n"
    assert run(capsys, "string", "realize", "S01XYX")[0] == EXIT_USAGE
    assert run(capsys, "string", "family", "no-such-family")[0] == EXIT_USAGE
    assert run(capsys, "string", "extract", "--g6", C6)[0] == EXIT_USAGE


def test_family(capsys):
    code, out, _ = run(capsys, "family", "--table", "1", "--variant", "2", "--k", "0")
    g = parse_graph6(out.strip())
    assert code == EXIT_OK and g.n == 13 and iteration_number(g) == 12
    code, out, _ = run(capsys, "family", "--string-family", "even-family-1", "--format", "dot")
    assert out.startswith("graph G {")
    code, out, _ = run(capsys, "family", "--table", "2", "--variant", "1", "--k", "0")
    assert code == EXIT_OK and iteration_number(parse_graph6(out.strip())) == 16
    assert run(capsys, "family", "--table", "4", "--variant", "1")[0] == EXIT_USAGE
    assert run(capsys, "family", "--table", "1")[0] == EXIT_USAGE


def test_catalog(capsys, tmp_path):
    code, out, _ = run(capsys, "catalog", "--order", "10..12", "--degrees", "2,3", "--workers", "0")
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 2
    assert [parse_graph6(line.split("\t")[0]).n for line in lines] == [11, 12]
    target = tmp_path / "cat.g6"
    code, _, err = run(capsys, "catalog", "--order", "10", "--out", str(target), "--workers", "0")
    assert code == EXIT_OK and len(target.read_text().splitlines()) == 4
    assert len(json.loads(target.with_suffix(".json").read_text())) == 4
    code, out, err = run(capsys, "catalog", "--order", "15..15", "--degrees", "3,4", "--format", "json", "--workers", "0")
    assert json.loads(out)[0]["expected_failures"] == [9, 10]
    assert "deg34-figures" in err
    with pytest.raises(SystemExit) as exc:
        main(["catalog", "--order", "x..y"])
    assert exc.value.code == EXIT_USAGE


def test_verbose_keeps_stdout_clean(capsys):
    code, out, _ = run(capsys, "-v", "catalog", "--order", "10..12", "--degrees", "2,3", "--workers", "0")
    assert code == EXIT_OK
    assert [parse_graph6(line.split("\t")[0]).n for line in out.splitlines()] == [11, 12]
    (handler,) = get_logger("longref.cli-stream").handlers
    assert handler.stream is sys.stderr


def test_search(capsys):
    code, out, err = run(capsys, "search", "--n", "6", "--degrees", "2,3", "--workers", "0")
    assert code == EXIT_OK and out == ""
    assert "found=0" in err
    code, out, err = run(capsys, "search", "--n", "8", "--degrees", "1,2,3", "--max-nodes", "3", "--workers", "0")
    assert code == EXIT_BUDGET and "budget exceeded" in err


def test_gap_check(capsys):
    code, out, _ = run(
        capsys, "gap-check", "--max-order", "60", "--degrees", "2,3", "--modulus", "18", "--residues", "6,12"
    )
    assert (code, out) == (EXIT_OK, "6 24 30 42 48 60\n")
    code, out, _ = run(capsys, "gap-check", "--max-order", "30", "--degrees", "1,3", "--format", "json")
    assert 14 not in json.loads(out)["gaps"]
