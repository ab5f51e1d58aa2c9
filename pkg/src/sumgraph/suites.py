"""Verification suites behind ``sumgraph verify``.

Each suite returns a JSON-ready dict. Results from search carry the label
bound they were obtained under; nothing here claims unbounded nonexistence.
"""

from __future__ import annotations

import itertools

from .graph import Mode, SumGraph, isomorphic
from .induction import c2_of_A, gen_gap_graph, gen_standard, induce
from .labeling import validate
from .refuter import analyze, term_struct_thresholds
from .search import Status, has_minimal_labeling_bounded, sum_number_bounded

KNOWN_SIGMA = (
    ("path", 3, 1),
    ("cycle", 5, 2),
    ("cycle", 4, 3),
    ("complete", 4, 5),
)

SUITES = ("term-struct", "gap-conjecture", "cAn-conjecture", "sigma-known", "section2-claims")


def sigma_known(max_label: int = 300, max_isolates: int = 6, time_budget: float | None = None) -> dict:
    rows = []
    for family, n, expected in KNOWN_SIGMA:
        G = gen_standard(family, n)
        res = sum_number_bounded(G, max_isolates, max_label, time_budget)
        witness_ok = not validate(res.witness)
        rows.append({
            "graph": f"{family}{n}",
            "expected": expected,
            "sigma": res.sigma,
            "witness": list(res.witness.labels),
            "witness_valid": witness_ok,
            "exhaustive_below": res.exhaustive_below,
            "match": res.sigma == expected and witness_ok and res.exhaustive_below,
        })
    return {"suite": "sigma-known", "bounds": {"max_label": max_label, "max_isolates": max_isolates},
            "results": rows, "all_match": all(r["match"] for r in rows)}


def _minimal_row(G: SumGraph, max_label: int, time_budget: float | None) -> dict:
    res = has_minimal_labeling_bounded(G, max_label, time_budget)
    row = {"status": "Found" if res.found else
           ("BudgetExceeded" if res.status is Status.BUDGET_EXCEEDED else "NoneWithinBound"),
           "bound": max_label, "nodes": res.outcome.nodes_explored}
    if res.found:
        row["labeling"] = list(res.labeling.labels)
    return row


def gap_conjecture(k_lo: int = 10, k_hi: int = 12, max_label: int = 300,
                   time_budget: float | None = None) -> dict:
    """Bounded search on every gap-graph with ``3 < gap < k``."""
    rows = []
    for k in range(k_lo, k_hi + 1):
        for gap in range(4, k):
            row = {"k": k, "gap": gap}
            row.update(_minimal_row(gen_gap_graph(k, gap).graph, max_label, time_budget))
            rows.append(row)
    return {"suite": "gap-conjecture", "bounds": {"k": [k_lo, k_hi], "max_label": max_label},
            "results": rows,
            "counterexamples": [r for r in rows if r["status"] == "Found"],
            "complete": all(r["status"] != "BudgetExceeded" for r in rows)}


def can_conjecture(n_lo: int = 7, n_hi: int = 7, max_label: int = 500,
                   time_budget: float | None = None) -> dict:
    """Bounded search for a labeling with label 1 on the ``C^2`` expansion of ``A_n``."""
    rows = []
    for n in range(n_lo, n_hi + 1):
        G = c2_of_A(n).graph
        row = {"n": n, "vertices": G.vertex_count}
        row.update(_minimal_row(G, max_label, time_budget))
        rows.append(row)
    return {"suite": "cAn-conjecture", "bounds": {"n": [n_lo, n_hi], "max_label": max_label},
            "results": rows,
            "counterexamples": [r for r in rows if r["status"] == "Found"],
            "complete": all(r["status"] != "BudgetExceeded" for r in rows)}


def term_struct_suite(n_lo: int = 7, n_hi: int = 39) -> dict:
    top = analyze(c2_of_A(n_hi))
    return {"suite": "term-struct", "bounds": {"n": [n_lo, n_hi]},
            "at_n_hi": {"n": n_hi, "points": list(top.term_struct_points),
                        "failures": {str(k): v for k, v in sorted(top.details.items())}},
            "thresholds": term_struct_thresholds(n_lo, n_hi).to_json()}


def _eq(G: SumGraph, H: SumGraph) -> bool:
    return G.vertex_count == H.vertex_count and G.edge_count == H.edge_count and isomorphic(G, H)


def max_edge_bags(k: int, multisets: bool = False) -> tuple[int, list[tuple[int, ...]]]:
    """Largest edge+loop count of a loops graph induced by ``k`` values in ``1..3k``, and the bags attaining it."""
    pick = itertools.combinations_with_replacement if multisets else itertools.combinations
    best, where = -1, []
    for bag in pick(range(1, 3 * k + 1), k):
        m = induce(bag, Mode.LOOPS).graph.edge_count
        if m > best:
            best, where = m, [bag]
        elif m == best:
            where.append(bag)
    return best, where


def section2_claims(k_lo: int = 5, k_hi: int = 10, maximal_k: int = 5) -> dict:
    """Report how the graphs of ``{2..k}``, ``{1..k, 3k}`` and ``{1..k}`` actually relate."""
    rows = []
    for k in range(k_lo, k_hi + 1):
        a = induce(range(2, k + 1), Mode.LOOPS).graph
        b = induce([*range(1, k + 1), 3 * k], Mode.LOOPS).graph
        c = induce(range(1, k + 1), Mode.LOOPS).graph
        alt = [*range(1, k - 1), 2 * k - 3]
        rows.append({
            "k": k,
            "vertices": {"2..k": a.vertex_count, "1..k,3k": b.vertex_count},
            "edges": {"2..k": a.edge_count, "1..k,3k": b.edge_count},
            "isomorphic": _eq(a, b),
            "1..k,3k equals 1..k plus an isolate": _eq(b, c.with_isolates(1)),
            "set with 1 inducing 2..k": alt if _eq(a, induce(alt, Mode.LOOPS).graph) else None,
        })
    maximal = []
    for k in range(1, maximal_k + 1):
        best, where = max_edge_bags(k)
        ref = induce(range(1, k + 1), Mode.LOOPS).graph
        mbest, mwhere = max_edge_bags(k, multisets=True)
        other = next((w for w in where if not _eq(ref, induce(w, Mode.LOOPS).graph)), None)
        maximal.append({
            "k": k,
            "max_edges": best,
            "consecutive_edges": ref.edge_count,
            "attained": ref.edge_count == best,
            "all_maximal_isomorphic": other is None,
            "non_isomorphic_maximal": list(other) if other else None,
            "multiset_max_edges": mbest,
            "multiset_example": list(mwhere[0]),
        })
    return {"suite": "section2-claims", "bounds": {"k": [k_lo, k_hi], "maximal_k": maximal_k},
            "alternative_sets": rows, "maximality": maximal}
