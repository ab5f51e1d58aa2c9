"""Label-free structure of an induced graph.

Everything here is computed from the graph alone: terminal counts,
non-equivalent vertex count, which pairs of generators have mergeable
covers, and (for graphs that have vertices induced by every value 2..6)
the seven terminal-structure points used against the clique expansions of
``A_n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..covers import merge_one_bound, mergeable
from ..graph import SumGraph, equivalence_classes, equivalent
from ..induction import InducedGraph, c2_of_A
from ..labeling import terminals_of

SMALL = (2, 3, 4, 5, 6)

POINT_NAMES = {
    1: "v_k has exactly k proper terminals, pairwise non-equivalent",
    2: "v_j and v_k are mergeable for j <= 3",
    3: "l(v_2) = 1 or l(v_3) = 1 forces l(v_k) <= k",
    4: "the proper terminals shared by all v_k are a single vertex, the only isolated one",
    5: "tau(v_2) and tau(v_3) meet only in that vertex",
    6: "tau(v_k) is contained in tau(v_j) when j >= k + 2",
    7: "the chosen vertices are pairwise adjacent",
}


@dataclass
class StructuralReport:
    psi_classes: dict[int, tuple[int, ...]]
    terminal_counts: dict[int, tuple[int, bool]]
    non_equiv_count: int
    mergeable_pairs: list[tuple[int, int]]
    term_struct_points: tuple[bool, ...] | None = None
    details: dict[int, str] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "psi_classes": {str(k): list(v) for k, v in sorted(self.psi_classes.items())},
            "terminal_counts": {str(v): {"proper": p, "improper": imp}
                                for v, (p, imp) in sorted(self.terminal_counts.items())},
            "non_equiv_count": self.non_equiv_count,
            "mergeable_pairs": [list(p) for p in self.mergeable_pairs],
            "term_struct_points": list(self.term_struct_points) if self.term_struct_points is not None else None,
            "term_struct_details": {str(k): v for k, v in sorted(self.details.items())},
        }


def _tau(G: SumGraph, v: int) -> frozenset[int]:
    return terminals_of(G, v).proper


def _t(G: SumGraph, v: int) -> int:
    return terminals_of(G, v).count


def term_struct(G: InducedGraph, non_equiv: int | None = None) -> tuple[tuple[bool, ...], dict[int, str]]:
    """Evaluate the seven points for every choice of ``v_i`` in ``psi(i)``, ``i = 2..6``.

    Each point holds only if it holds for every choice. ``details`` gives
    a counterexample for each point that fails.
    """
    g = G.graph
    psi = G.psi
    if any(i not in psi for i in SMALL):
        raise ValueError("the terminal-structure points need vertices induced by each of 2..6")
    if non_equiv is None:
        non_equiv = len(equivalence_classes(g))
    why: dict[int, str] = {}
    isolated = [v for v in range(g.vertex_count) if g.is_isolated(v)]

    p1 = True
    for k in SMALL:
        for v in psi[k]:
            tau = _tau(g, v)
            term = terminals_of(g, v)
            distinct = all(not equivalent(g, a, b) for a, b in itertools.combinations(sorted(tau), 2))
            if len(tau) != k or not term.improper or not distinct:
                p1 = False
                why.setdefault(1, f"vertex {v} in psi({k}) has {len(tau)} proper terminals"
                                  + ("" if distinct else ", some of them equivalent"))

    p2 = True
    p3 = True
    for j in (2, 3):
        for k in SMALL:
            for vj in psi[j]:
                for vk in psi[k]:
                    if vj == vk:
                        continue
                    ok = min(_t(g, vj), _t(g, vk)) >= 2 and mergeable(_t(g, vj), _t(g, vk), non_equiv)
                    if not ok:
                        p2 = False
                        need = 2 * (_t(g, vj) - 1) * (_t(g, vk) - 1) + 3
                        why.setdefault(2, f"psi({j}) and psi({k}) need {need} non-equivalent vertices, "
                                          f"the graph has {non_equiv}")
                    # with l(v_j) = 1 the partner label is at most t(v_k) - 1
                    if j != k and not (ok and merge_one_bound(_t(g, vk)) <= k):
                        p3 = False
                        why.setdefault(3, f"no bound l(v) <= {k} for v in psi({k}) from psi({j})")

    p4 = len(isolated) == 1
    if not p4:
        why[4] = f"isolated vertices {isolated}"
    for choice in itertools.product(*(psi[k] for k in SMALL)):
        inter = frozenset.intersection(*(_tau(g, v) for v in choice))
        if inter != frozenset(isolated[:1]):
            p4 = False
            why.setdefault(4, f"proper terminals shared by {list(choice)}: {sorted(inter)}")
            break

    p5 = True
    for v2 in psi[2]:
        for v3 in psi[3]:
            shared = _tau(g, v2) & _tau(g, v3)
            if not shared <= set(isolated[:1]) or len(isolated) != 1:
                p5 = False
                why.setdefault(5, f"tau({v2}) and tau({v3}) share {sorted(shared)}")

    p6 = True
    for k in SMALL:
        for j in SMALL:
            if j < k + 2:
                continue
            for vk in psi[k]:
                for vj in psi[j]:
                    if not _tau(g, vk) <= _tau(g, vj):
                        p6 = False
                        why.setdefault(6, f"tau({vk}) from psi({k}) is not inside tau({vj}) from psi({j})")

    p7 = True
    for j, k in itertools.combinations(SMALL, 2):
        for vj in psi[j]:
            for vk in psi[k]:
                if not g.has_edge(vj, vk):
                    p7 = False
                    why.setdefault(7, f"{vj} in psi({j}) and {vk} in psi({k}) are not adjacent")

    return (p1, p2, p3, p4, p5, p6, p7), why


def analyze(G: InducedGraph) -> StructuralReport:
    g = G.graph
    n = g.vertex_count
    classes = equivalence_classes(g)
    counts = {v: (len(terminals_of(g, v).proper), terminals_of(g, v).improper) for v in range(n)}
    t = {v: counts[v][0] + (1 if counts[v][1] else 0) for v in range(n)}
    pairs = [(u, v) for u, v in itertools.combinations(range(n), 2)
             if min(t[u], t[v]) >= 1 and mergeable(t[u], t[v], len(classes))]
    report = StructuralReport(dict(G.psi), counts, len(classes), pairs)
    if all(i in G.psi for i in SMALL):
        report.term_struct_points, report.details = term_struct(G, len(classes))
    return report


@dataclass
class ThresholdReport:
    """Smallest ``n`` in the scanned range at which each point holds.

    ``stable_from`` is the smallest ``n`` from which the point holds for
    every larger ``n`` in the range (None if it fails at the top).
    """

    n_range: tuple[int, int]
    first_holds: dict[int, int | None]
    stable_from: dict[int, int | None]
    all_points_from: int | None

    def to_json(self) -> dict:
        return {
            "n_range": list(self.n_range),
            "points": {str(p): {"statement": POINT_NAMES[p], "first_holds": self.first_holds[p],
                                "stable_from": self.stable_from[p]} for p in POINT_NAMES},
            "all_points_from": self.all_points_from,
        }


def term_struct_thresholds(lo: int = 7, hi: int = 39) -> ThresholdReport:
    """Evaluate the seven points on the ``C^2`` expansion of ``A_n`` for ``n = lo..hi``."""
    if lo < 6 or hi < lo:
        raise ValueError("need 6 <= lo <= hi")
    table: dict[int, tuple[bool, ...]] = {}
    for n in range(lo, hi + 1):
        table[n], _ = term_struct(c2_of_A(n))
    first: dict[int, int | None] = {}
    stable: dict[int, int | None] = {}
    for p in POINT_NAMES:
        hold = [n for n in range(lo, hi + 1) if table[n][p - 1]]
        first[p] = hold[0] if hold else None
        s = None
        for n in range(hi, lo - 1, -1):
            if not table[n][p - 1]:
                break
            s = n
        stable[p] = s
    all_from = None
    for n in range(hi, lo - 1, -1):
        if not all(table[n]):
            break
        all_from = n
    return ThresholdReport((lo, hi), first, stable, all_from)
