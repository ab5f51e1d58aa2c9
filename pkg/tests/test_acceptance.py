"""End-to-end acceptance checks, one test per criterion.

Each test records a one-line verdict that the terminal summary prints as
``criterion N: PASS|FAIL ...``. Search results are stated relative to the
label bound they were run with.
"""

import itertools
import json
import os
import random
import time

import pytest

from conftest import ACCEPTANCE
from props import (check_cover, check_merge, check_non_eq, check_round_trip, check_scale, check_seq_proper,
                   labelings_for, merge_rich_bag)
from sumgraph import Labeling, Mode, induce, isomorphic, validate
from sumgraph.cli import main
from sumgraph.graph import SumGraph, canonical_form
from sumgraph.induction import c2_of_A
from sumgraph.refuter import analyze, term_struct_thresholds
from sumgraph.search import SearchConfig, Status, find_labelings, has_minimal_labeling_bounded, oracle_forms
from sumgraph.suites import KNOWN_SIGMA, max_edge_bags, sigma_known

LONG = os.environ.get("SUMGRAPH_LONG") == "1"


def record(k, ok, detail):
    ACCEPTANCE[k] = (bool(ok), detail)
    assert ok, detail


def _cli(capsys, *argv):
    assert main(list(argv)) == 0
    return json.loads(capsys.readouterr().out)["result"]


def test_criterion_1_no_minimal_labeling_with_loops(tmp_path, capsys):
    bag, graph, trace = tmp_path / "bag.txt", tmp_path / "g.txt", tmp_path / "trace.json"
    bag.write_text("2 3 4 6 7\n")
    _cli(capsys, "induce", str(bag), "--mode", "loops", "-o", str(graph))
    t0 = time.monotonic()
    found = _cli(capsys, "search", str(graph), "--require-one", "--max-label", "500", "--budget", "60")
    t_search = time.monotonic() - t0
    t0 = time.monotonic()
    refuted = _cli(capsys, "refute", str(bag), "--mode", "loops", "--budget", "60", "--trace-out", str(trace))
    t_refute = time.monotonic() - t0
    replay = _cli(capsys, "check-trace", str(bag), str(trace), "--mode", "loops")
    proved = refuted["result"] == "Refuted" and refuted["checked"] and replay["checked"]
    ok = (found["status"] == "ExhaustedWithinBound" and not found["labelings"] and proved
          and t_search < 60 and t_refute < 60)
    record(1, ok, f"search {found['status']} at B=500 in {t_search:.1f}s; "
                  f"refute {refuted['result']} (trace replays: {bool(replay['checked'])}) in {t_refute:.1f}s")


def test_criterion_2_known_sum_numbers():
    t0 = time.monotonic()
    res = sigma_known(300, 6, 300)
    dt = time.monotonic() - t0
    got = ", ".join(f"{r['graph']}={r['sigma']}" for r in res["results"])
    assert [r["expected"] for r in res["results"]] == [s for *_, s in KNOWN_SIGMA]
    record(2, res["all_match"] and dt < 300, f"{got} (B=300, witnesses valid, exhaustive below) in {dt:.1f}s")


def test_criterion_3_c2_a6_has_minimal_labeling():
    G = c2_of_A(6).graph
    t0 = time.monotonic()
    res = has_minimal_labeling_bounded(G, 2000, 120)
    dt = time.monotonic() - t0
    ok = res.found and not validate(res.labeling) and 1 in res.labeling.labels and dt < 120
    record(3, ok, f"{res.status.value} {list(res.labeling.labels) if res.found else ''} in {dt:.1f}s")


def _bounded_none(n, B, budget):
    t0 = time.monotonic()
    res = has_minimal_labeling_bounded(c2_of_A(n).graph, B, budget)
    return res.status, time.monotonic() - t0


def test_criterion_4_c2_a7_a8_bounded_evidence():
    # A_7 is asserted. A_8 misses its time targets on one core (B = 2000
    # would take hours), so that part is reported and expected to fail.
    runs = [(7, 2000, 1800), (7, 500, 300), (8, 500, 300)]
    if LONG:
        runs.append((8, 2000, 1800))
    done, parts = {}, []
    for n, B, budget in runs:
        status, dt = _bounded_none(n, B, budget)
        done[n, B] = status is Status.EXHAUSTED
        parts.append(f"A_{n} B={B}: {'NoneWithinBound' if done[n, B] else status.value} ({dt:.0f}s)")
    if not LONG:
        parts.append("A_8 B=2000 not run (set SUMGRAPH_LONG=1)")
    detail = "; ".join(parts)
    ok = all(done.values()) and LONG
    ACCEPTANCE[4] = (ok, detail)
    assert done[7, 2000] and done[7, 500], detail
    if not ok:
        pytest.xfail(f"C^2(A_8) misses the time targets: {detail}")


def test_criterion_5_term_struct():
    t0 = time.monotonic()
    top = analyze(c2_of_A(39))
    th = term_struct_thresholds(7, 39)
    dt = time.monotonic() - t0
    firsts = " ".join(f"p{p}:{th.first_holds[p]}" for p in sorted(th.first_holds))
    ok = all(top.term_struct_points) and len(top.term_struct_points) == 7 and dt < 60
    record(5, ok, f"all 7 points hold at n=39; first n {firsts}; in {dt:.1f}s")


def test_criterion_6_multiset_isomorphism():
    a = induce([2, 2, 3, 3, 4, 6, 7], Mode.SIMPLE).graph
    b = induce([1, 5, 2, 2, 4, 6, 9], Mode.SIMPLE).graph
    record(6, isomorphic(a, b), f"{a.vertex_count} vertices, {a.edge_count} vs {b.edge_count} edges")


def test_criterion_7_oracle_equivalence():
    B = 15
    t0 = time.monotonic()
    checked = mismatches = 0
    for n in range(1, 5):
        reachable = oracle_forms(n, B)
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            G = SumGraph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            out = find_labelings(G, SearchConfig(B, time_budget=0))
            found = out.status is Status.FOUND and not validate(out.labelings[0])
            checked += 1
            mismatches += found != (canonical_form(G) in reachable)
    dt = time.monotonic() - t0
    record(7, mismatches == 0 and dt < 600, f"{checked} graphs, {mismatches} disagreements in {dt:.1f}s")


N_PROPS = 1000


def _random_bag(rng, size=7, top=25):
    return [rng.randint(1, top) for _ in range(rng.randint(1, size))]


def test_criterion_8_property_suites():
    rng = random.Random(20240)
    modes = list(Mode)
    counts = {}
    t0 = time.monotonic()
    counts["round trip"] = sum(len(check_round_trip(_random_bag(rng, 10, 40), rng.choice(modes)))
                               for _ in range(N_PROPS))
    counts["scale/normalize"] = sum(len(check_scale(_random_bag(rng, 9, 30), rng.choice(modes), rng.randint(1, 50)))
                                    for _ in range(N_PROPS))
    found = [L for _ in range(N_PROPS) for L in labelings_for(_random_bag(rng), rng.choice(modes))[:2]]
    counts["NonEq"] = sum(len(check_non_eq(L)) for L in found)
    counts["SeqProper"] = sum(len(check_seq_proper(L)) for L in found)
    counts["cover"] = sum(len(check_cover(L)) for L in found)
    pairs = bad = 0
    for _ in range(N_PROPS):
        for L in labelings_for(merge_rich_bag(rng), Mode.SIMPLE, extra=2):
            b, p = check_merge(L)
            bad += len(b)
            pairs += p
    counts["2MergeEq"] = bad
    dt = time.monotonic() - t0
    summary = ", ".join(f"{k} {v}" for k, v in counts.items())
    record(8, not any(counts.values()) and pairs > 0,
           f"{N_PROPS} instances per suite, violations: {summary}; {pairs} mergeable pairs; {dt:.0f}s")


def test_criterion_9_consecutive_labels_maximize_edges():
    t0 = time.monotonic()
    rows = []
    for k in range(1, 6):
        best, _ = max_edge_bags(k)
        rows.append((k, induce(range(1, k + 1), Mode.LOOPS).graph.edge_count, best))
    dt = time.monotonic() - t0
    ok = all(a == b for _, a, b in rows) and dt < 300
    record(9, ok, " ".join(f"k={k}:{a}/{b}" for k, a, b in rows) + f" (k-element sets, values <= 3k) in {dt:.1f}s")
