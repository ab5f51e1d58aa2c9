"""Property checks shared by the hypothesis tests and the acceptance run.

Each ``check_*`` returns a list of human-readable violations (empty when
the property holds).
"""

from __future__ import annotations

import itertools

from sumgraph import Labeling, Mode, equivalence_classes, equivalent, induce, normalize, validate
from sumgraph.covers import build_cover, merge_relations, mergeable, relation_holds
from sumgraph.graph import format_graph, parse_graph
from sumgraph.labeling import format_labeling, label_gcd, parse_labeling, terminals
from sumgraph.search import SearchConfig, find_labelings


def labelings_for(bag, mode: Mode, extra: int = 3) -> list[Labeling]:
    """The inducing labeling plus up to ``extra`` others found by search."""
    ig = induce(bag, mode)
    out = [Labeling(ig.graph, ig.labels)]
    if extra and ig.graph.vertex_count:
        cfg = SearchConfig(max(ig.labels), max_results=extra, time_budget=0, node_limit=20_000)
        out.extend(find_labelings(ig.graph, cfg).labelings)
    return out


def check_round_trip(bag, mode: Mode) -> list[str]:
    ig = induce(bag, mode)
    L = Labeling(ig.graph, ig.labels)
    bad = [f"induced labeling invalid: {v}" for v in validate(L)]
    if parse_graph(format_graph(ig.graph)) != ig.graph:
        bad.append("graph file round trip changed the graph")
    if parse_labeling(format_labeling(L), ig.graph) != L:
        bad.append("labeling file round trip changed the labeling")
    for value, block in ig.psi.items():
        if any(ig.labels[v] != value for v in block):
            bad.append(f"psi({value}) holds a vertex with another label")
        if not all(equivalent(ig.graph, u, v) for u, v in itertools.combinations(block, 2)):
            bad.append(f"copies of {value} are not equivalent")
    return bad


def check_scale(bag, mode: Mode, c: int) -> list[str]:
    ig = induce(bag, mode)
    L = Labeling(ig.graph, ig.labels)
    bad = []
    S = L.scaled(c)
    if validate(S):
        bad.append(f"scaling by {c} broke validity")
    if not ig.graph.vertex_count:
        return bad
    N = normalize(S)
    g = label_gcd(L.labels)
    if validate(N):
        bad.append("normalized labeling invalid")
    if label_gcd(N.labels) != 1:
        bad.append("normalized labeling has gcd > 1")
    if N.labels != tuple(x // g for x in L.labels):
        bad.append("normalize did not divide by the gcd")
    return bad


def check_non_eq(L: Labeling) -> list[str]:
    G = L.graph
    return [f"vertices {u}, {v} share label {L.labels[u]} but are not equivalent"
            for u, v in itertools.combinations(range(G.vertex_count), 2)
            if L.labels[u] == L.labels[v] and not equivalent(G, u, v)]


def check_seq_proper(L: Labeling) -> list[str]:
    M = set(L.labels)
    bad = []
    for v in range(L.graph.vertex_count):
        for w in terminals(L, v).proper:
            if L.labels[v] + L.labels[w] in M:
                bad.append(f"l({v}) + l({w}) = {L.labels[v] + L.labels[w]} is a label")
    return bad


def check_cover(L: Labeling) -> list[str]:
    G = L.graph
    distinct = set(L.labels)
    bad = []
    for v in range(G.vertex_count):
        c = build_cover(L, v)
        term = terminals(L, v)
        g = L.labels[v]
        if c.elements() != distinct:
            bad.append(f"cover of {v} misses labels")
        if sum(len(s.elements()) for s in c.sequences) != len(c.elements()):
            bad.append(f"cover of {v} has overlapping sequences")
        if len(c.sequences) > term.count:
            bad.append(f"cover of {v} has {len(c.sequences)} sequences for {term.count} terminals")
        if any(s.difference != g for s in c.sequences):
            bad.append(f"cover of {v} mixes differences")
        if any(s.last not in c.terminal_labels for s in c.sequences):
            bad.append(f"cover of {v} has a sequence ending at a non-terminal")
        lasts = {s.last for s in c.sequences}
        if any(L.labels[w] not in lasts for w in term.proper):
            bad.append(f"a proper terminal of {v} ends no sequence")
        # point 4 counts terminals by label: equivalent isolates may carry different labels
        if term.improper and len(c.sequences) == len(c.terminal_labels):
            if not any(s.singleton and s.start == g for s in c.sequences):
                bad.append(f"cover of {v} has one sequence per terminal class but no singleton ({g})")
    return bad


def check_merge(L: Labeling) -> tuple[list[str], int]:
    """2MergeEq on every mergeable pair of generators without loops; also returns the pair count."""
    G = L.graph
    ne = len(equivalence_classes(G))
    bad, pairs = [], 0
    for u, v in itertools.combinations(range(G.vertex_count), 2):
        if G.has_loop(u) or G.has_loop(v):
            continue
        t1, t2 = terminals(L, u).count, terminals(L, v).count
        if t1 < 2 or t2 < 2 or not mergeable(t1, t2, ne):
            continue
        pairs += 1
        d1, d2 = L.labels[u], L.labels[v]
        if not any(relation_holds(j, k, d1, d2) for j, k in merge_relations(t1, t2)):
            bad.append(f"generators {u}, {v} (labels {d1}, {d2}) satisfy no relation for t = {t1}, {t2}")
    return bad, pairs


def merge_rich_bag(rng):
    """Bags with a long run of small values, so that mergeable pairs actually occur."""
    m = rng.randint(8, 16)
    bag = list(range(1, m + 1)) + [rng.randint(1, 3 * m) for _ in range(rng.randint(0, 3))]
    if rng.random() < 0.3:
        bag = [x * rng.randint(1, 3) for x in bag]
    return sorted(set(bag)) if rng.random() < 0.7 else sorted(bag)
