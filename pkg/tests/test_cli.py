import json

import pytest

from sumgraph import report
from sumgraph.cli import main


@pytest.fixture
def files(tmp_path):
    bag = tmp_path / "bag.txt"
    bag.write_text("2 3 4 6 7\n")
    graph = tmp_path / "g.txt"
    lab = tmp_path / "l.txt"
    assert main(["induce", str(bag), "--mode", "loops", "-o", str(graph), "--labeling-out", str(lab)]) == 0
    return tmp_path, bag, graph, lab


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, (json.loads(out.out) if code == 0 and "--text" not in argv else out.out), out.err


def test_induce_writes_round_trip_files(files, capsys):
    tmp, bag, graph, lab = files
    capsys.readouterr()
    assert graph.read_text().splitlines()[0] == "5 loops"
    code, rep, _ = run(capsys, ["induce", str(bag), "--mode", "loops"])
    assert code == 0
    assert rep["result"]["graph"] == graph.read_text()
    assert rep["result"]["psi"]["6"] == [3]
    assert rep["inputs"][str(bag)].startswith("sha256:")
    code, rep, _ = run(capsys, ["validate", str(graph), str(lab)])
    assert rep["result"]["valid"] and not rep["result"]["minimal"]


def test_induce_empty_bag(tmp_path, capsys):
    empty = tmp_path / "e.txt"
    empty.write_text("# nothing here\n")
    out = tmp_path / "e.graph"
    code, rep, _ = run(capsys, ["induce", str(empty), "-o", str(out)])
    assert code == 0 and out.read_text() == "0 simple\n"
    assert rep["result"]["vertices"] == 0


def test_validate_reports_violations(files, capsys):
    tmp, bag, graph, lab = files
    bad = tmp / "bad.txt"
    bad.write_text("2\n3\n4\n6\n8\n")
    code, rep, _ = run(capsys, ["validate", str(graph), str(bad)])
    assert code == 0 and not rep["result"]["valid"]
    kinds = {(v["kind"], tuple(v["pair"])) for v in rep["result"]["violations"]}
    assert ("UnguaranteedEdge", (1, 2)) in kinds


def test_search_no_minimal_labeling(files, capsys):
    tmp, bag, graph, lab = files
    code, rep, _ = run(capsys, ["search", str(graph), "--require-one", "--max-label", "500"])
    assert code == 0
    res = rep["result"]
    assert res["status"] == "ExhaustedWithinBound" and res["labelings"] == [] and res["bound"] == 500
    assert rep["bounds"]["max_label"] == 500 and rep["bounds"]["require_label_one"] is True
    assert "time_budget" in rep["bounds"]


def test_search_finds_and_echoes(files, capsys):
    tmp, bag, graph, lab = files
    code, rep, _ = run(capsys, ["search", str(graph), "--max-label", "30", "--limit", "0"])
    assert rep["result"]["status"] == "Found"
    assert [2, 3, 4, 6, 7] in rep["result"]["labelings"]
    assert rep["command"] == ["sumgraph", "search", str(graph), "--max-label", "30", "--limit", "0"]


def test_reports_reproduce(files, capsys):
    tmp, bag, graph, lab = files
    argv = ["refute", str(bag)]
    a = (main(argv), capsys.readouterr().out)
    b = (main(argv), capsys.readouterr().out)
    assert report.payload(json.loads(a[1])) == report.payload(json.loads(b[1]))


def test_budget_env_in_bounds(files, capsys, monkeypatch):
    tmp, bag, graph, lab = files
    monkeypatch.setenv("SUMGRAPH_TIME_BUDGET", "7")
    code, rep, _ = run(capsys, ["search", str(graph)])
    assert rep["bounds"]["time_budget"] == 7.0 and rep["bounds"]["max_label"] == 100


def test_refute_writes_checkable_trace(files, capsys):
    tmp, bag, graph, lab = files
    trace = tmp / "trace.json"
    code, rep, _ = run(capsys, ["refute", str(bag), "--trace-out", str(trace)])
    assert rep["result"]["result"] == "Refuted" and rep["result"]["checked"] is True
    code, rep, _ = run(capsys, ["check-trace", str(bag), str(trace)])
    assert rep["result"]["checked"] is True
    code, rep, _ = run(capsys, ["check-trace", str(bag), str(trace), "--mode", "simple"])
    assert rep["result"]["checked"] is False


def test_refute_open_case(tmp_path, capsys):
    bag = tmp_path / "one.txt"
    bag.write_text("1")
    code, rep, _ = run(capsys, ["refute", str(bag)])
    assert rep["result"]["result"] == "NotRefuted" and rep["result"]["labeling"] == [1]


def test_text_rendering(files, capsys):
    tmp, bag, graph, lab = files
    code, text, _ = run(capsys, ["refute", str(bag), "--text"])
    assert code == 0 and "proof:" in text and "[NonEq]" in text
    code, text, _ = run(capsys, ["cover", str(graph), str(lab), "--generator", "0", "--text"])
    assert "2 +2×2 → 6 [terminal]" in text


def test_cover_json(files, capsys):
    tmp, bag, graph, lab = files
    code, rep, _ = run(capsys, ["cover", str(graph), str(lab)])
    assert len(rep["result"]["covers"]) == 5
    code, _, err = run(capsys, ["cover", str(graph), str(lab), "--generator", "9"])
    assert code == 1 and "not a vertex" in err


def test_sigma_command(tmp_path, capsys):
    g = tmp_path / "p3.txt"
    g.write_text("4 simple\n0 1\n1 2\n")
    code, rep, _ = run(capsys, ["sigma", str(g), "--max-label", "50"])
    res = rep["result"]
    assert res["sigma"] == 1 and res["stripped_isolates"] == 1 and res["exhaustive_below"]
    loops = tmp_path / "l.txt"
    loops.write_text("1 loops\n0 0\n")
    code, _, err = run(capsys, ["sigma", str(loops)])
    assert code == 1


def test_sigma_not_found_is_a_finding(tmp_path, capsys):
    g = tmp_path / "k4.txt"
    g.write_text("4 simple\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, rep, _ = run(capsys, ["sigma", str(g), "--max-isolates", "2", "--max-label", "30"])
    assert code == 0 and rep["result"]["sigma"] is None


def test_verify_sigma_known(capsys):
    code, rep, _ = run(capsys, ["verify", "sigma-known"])
    assert code == 0 and rep["result"]["all_match"]
    got = {r["graph"]: r["sigma"] for r in rep["result"]["results"]}
    assert got == {"path3": 1, "cycle5": 2, "cycle4": 3, "complete4": 5}


def test_verify_section2(capsys):
    code, rep, _ = run(capsys, ["verify", "section2-claims", "--k-min", "5", "--k-max", "6"])
    rows = rep["result"]["alternative_sets"]
    assert [r["isomorphic"] for r in rows] == [False, False]
    assert all(r["1..k,3k equals 1..k plus an isolate"] for r in rows)
    assert all(m["attained"] for m in rep["result"]["maximality"])


def test_verify_gap_and_can(capsys):
    code, rep, _ = run(capsys, ["verify", "gap-conjecture", "--k-min", "10", "--k-max", "10", "--max-label", "100"])
    assert code == 0 and rep["result"]["counterexamples"] == [] and rep["result"]["complete"]
    assert rep["bounds"]["max_label"] == 100
    code, rep, _ = run(capsys, ["verify", "cAn-conjecture", "--n-min", "6", "--n-max", "7", "--max-label", "200"])
    assert [r["status"] for r in rep["result"]["results"]] == ["Found", "NoneWithinBound"]


def test_verify_term_struct(capsys):
    code, rep, _ = run(capsys, ["verify", "term-struct", "--n-min", "10", "--n-max", "39"])
    assert rep["result"]["at_n_hi"]["points"] == [True] * 7


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 3\nfour\n")
    code, _, err = run(capsys, ["induce", str(bad)])
    assert code == 1 and ":2:" in err
    code, _, err = run(capsys, ["search", str(tmp_path / "missing.txt")])
    assert code == 1 and "cannot read" in err
    g = tmp_path / "g.txt"
    g.write_text("3 simple\n0 7\n")
    code, _, err = run(capsys, ["search", str(g)])
    assert code == 1 and ":2:" in err


def test_usage_errors(tmp_path, capsys):
    assert main([]) == 2
    assert main(["search"]) == 2
    assert main(["verify", "everything"]) == 2
    g = tmp_path / "g.txt"
    g.write_text("5 simple\n")
    assert main(["search", str(g), "--max-label", "0"]) == 2
    assert main(["search", str(g), "--injective", "--max-label", "3"]) == 2
    capsys.readouterr()


def test_report_file(files, capsys):
    tmp, bag, graph, lab = files
    out = tmp / "rep.json"
    assert main(["validate", str(graph), str(lab), "--report", str(out)]) == 0
    assert json.loads(out.read_text())["tool"] == "sumgraph"
    capsys.readouterr()


def test_revalidate_refuses_bad_labelings():
    from sumgraph import induce
    G = induce([1, 2, 3]).graph
    report.revalidate(G, [[1, 2, 3]])
    with pytest.raises(AssertionError):
        report.revalidate(G, [[1, 2, 4]])
