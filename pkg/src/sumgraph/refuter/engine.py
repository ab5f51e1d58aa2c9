"""Symbolic refutation of minimal labelings.

Labels are unknowns. After fixing which class holds the label 1, every
edge-number must be the label of some vertex, so each unresolved edge is
split over all candidate carriers ``w`` with ``l(w) = l(u) + l(v)``. The
resulting linear system is solved exactly after each step, and a case
closes as soon as one of these fails:

* the system has no solution;
* some label is forced below 1, or to a non-integer constant;
* two non-equivalent vertices are forced to the same label;
* two non-adjacent vertices have a label sum forced equal to some label.

A case where every edge-number is already carried either has no free
label left (then the labeling is concrete and valid, so no refutation is
possible) or still has free labels; the engine does not split on values,
so the latter is reported as an open case.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from ..graph import Mode, SumGraph, class_index
from ..induction import InducedGraph
from ..labeling import Labeling, validate
from .linear import Form, Inconsistent, LinearSystem, add_forms, form_to_json, is_constant, max_value
from .trace import (GUARANTOR, INCONSISTENT, INTEGRALITY, NON_EQ, ONE_CLASS, POSITIVITY, SEQ_PROPER,
                    RefutationTrace, TraceNode)

DEFAULT_NODE_LIMIT = 200_000


@dataclass
class Refuted:
    trace: RefutationTrace
    nodes: int
    elapsed: float = 0.0

    refuted = True

    def to_json(self) -> dict:
        return {"result": "Refuted", "nodes": self.nodes, "trace": self.trace.to_json()}


@dataclass
class NotRefuted:
    """``branch`` lists the assumptions of the first case left open."""

    reason: str
    branch: list[dict] = field(default_factory=list)
    labeling: tuple[int, ...] | None = None
    nodes: int = 0
    elapsed: float = 0.0

    refuted = False

    def to_json(self) -> dict:
        return {
            "result": "NotRefuted",
            "reason": self.reason,
            "open_branch": self.branch,
            "labeling": list(self.labeling) if self.labeling is not None else None,
            "nodes": self.nodes,
        }


class _Open(Exception):
    def __init__(self, reason: str, labeling: tuple[int, ...] | None = None):
        super().__init__(reason)
        self.reason = reason
        self.labeling = labeling


class _Budget(Exception):
    pass


class _Engine:
    def __init__(self, G: SumGraph, node_limit: int, time_limit: float):
        self.G = G
        self.n = G.vertex_count
        self.cls = class_index(G)
        self.loops = G.mode is Mode.LOOPS
        self.edges = [(u, v) for u, v in G.edges()]
        pairs = []
        for u in range(self.n):
            for v in range(u, self.n):
                if u == v and not self.loops:
                    continue
                if v not in G.neighbors[u]:
                    pairs.append((u, v))
        self.non_edges = pairs
        self.nodes = 0
        self.node_limit = node_limit
        self.deadline = time.monotonic() + time_limit if time_limit > 0 else 0.0
        self.path: list[dict] = []

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit and self.nodes > self.node_limit:
            raise _Budget()
        if self.deadline and self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _Budget()

    # contradictions

    def forms(self, sysm: LinearSystem) -> list[Form]:
        return [sysm.form(v) for v in range(self.n)]

    def contradiction(self, sysm: LinearSystem, forms: list[Form]) -> dict | None:
        for v, f in enumerate(forms):
            top = max_value(f)
            if top is not None and top < 1:
                return {"lemma": POSITIVITY, "vertex": v, "form": form_to_json(f)}
            if is_constant(f) and f[-1].denominator != 1:
                return {"lemma": INTEGRALITY, "vertex": v, "form": form_to_json(f)}
        owner: dict[Form, int] = {}
        for v, f in enumerate(forms):
            if f in owner and self.cls[owner[f]] != self.cls[v]:
                return {"lemma": NON_EQ, "vertices": [owner[f], v]}
            owner.setdefault(f, v)
        for u, v in self.non_edges:
            w = owner.get(add_forms(forms[u], forms[v]))
            if w is not None:
                return {"lemma": SEQ_PROPER, "pair": [u, v], "guarantor": w}
        return None

    def open_edges(self, forms: list[Form]) -> list[tuple[int, int]]:
        present = set(forms)
        return [(u, v) for u, v in self.edges if add_forms(forms[u], forms[v]) not in present]

    def candidates(self, u: int, v: int) -> list[int]:
        return [w for w in range(self.n) if w != u and w != v]

    def child(self, sysm: LinearSystem, u: int, v: int, w: int) -> tuple[LinearSystem | None, dict | None]:
        """Add ``l(w) = l(u) + l(v)``; returns the new system or the contradiction it causes."""
        s2 = sysm.copy()
        coeffs: dict[int, int] = {w: 1}
        coeffs[u] = coeffs.get(u, 0) - 1
        coeffs[v] = coeffs.get(v, 0) - 1
        try:
            s2.add(coeffs, 0)
        except Inconsistent:
            return None, {"lemma": INCONSISTENT}
        bad = self.contradiction(s2, self.forms(s2))
        if bad is not None:
            return None, bad
        return s2, None

    # search

    def run(self) -> TraceNode:
        root = TraceNode(rule=ONE_CLASS)
        reps: dict[int, int] = {}
        for v in range(self.n):
            reps.setdefault(self.cls[v], v)
        for c in sorted(reps):
            x = reps[c]
            a = {"kind": "one", "vertex": x}
            sysm = LinearSystem(self.n)
            sysm.add({x: 1}, 1)
            self.path.append(a)
            bad = self.contradiction(sysm, self.forms(sysm))
            if bad is not None:
                node = TraceNode(assumption=a, contradiction=bad)
            else:
                node = self.explore(sysm, a)
            self.path.pop()
            root.children.append(node)
        return root

    def explore(self, sysm: LinearSystem, assumption: dict) -> TraceNode:
        self.tick()
        forms = self.forms(sysm)
        todo = self.open_edges(forms)
        if not todo:
            if not sysm.free():
                labels = tuple(int(f[-1]) for f in forms)
                L = Labeling(self.G, labels)
                if validate(L):  # pragma: no cover - the leaf checks rule this out
                    raise AssertionError(f"closed case with an invalid labeling {labels}")
                raise _Open("a valid minimal labeling exists", labels)
            raise _Open(f"every edge-number is carried but {len(sysm.free())} labels remain free")
        # fail first: split on the edge with the fewest viable carriers
        best: tuple[int, int] | None = None
        best_kids: list[tuple[int, LinearSystem | None, dict | None]] = []
        best_live = self.n + 1
        for u, v in todo:
            kids = []
            live = 0
            for w in self.candidates(u, v):
                s2, bad = self.child(sysm, u, v, w)
                kids.append((w, s2, bad))
                if s2 is not None:
                    live += 1
                    if live >= best_live:
                        break
            if live < best_live:
                best, best_kids, best_live = (u, v), kids, live
                if live <= 1:
                    break
        assert best is not None
        u, v = best
        node = TraceNode(assumption=assumption, rule=GUARANTOR, edge=best)
        for w, s2, bad in best_kids:
            a = {"kind": "sum", "edge": [u, v], "guarantor": w}
            self.path.append(a)
            if bad is not None:
                node.children.append(TraceNode(assumption=a, contradiction=bad))
            else:
                node.children.append(self.explore(s2, a))
            self.path.pop()
        return node


def refute_minimal(G: InducedGraph | SumGraph, node_limit: int = DEFAULT_NODE_LIMIT,
                   time_limit: float = 0.0) -> Refuted | NotRefuted:
    """Try to prove that ``G`` has no labeling using the label 1.

    ``node_limit`` caps the number of explored cases and ``time_limit`` the
    wall time in seconds (0 disables either); hitting a cap gives
    ``NotRefuted`` with the case being explored.
    """
    graph = G.graph if isinstance(G, InducedGraph) else G
    values = G.labels if isinstance(G, InducedGraph) else None
    eng = _Engine(graph, node_limit, time_limit)
    start = time.monotonic()
    try:
        root = eng.run()
    except _Open as exc:
        return NotRefuted(exc.reason, list(eng.path), exc.labeling, eng.nodes, time.monotonic() - start)
    except _Budget:
        return NotRefuted("case budget exhausted", list(eng.path), None, eng.nodes, time.monotonic() - start)
    trace = RefutationTrace(graph.vertex_count, graph.mode, values, root)
    return Refuted(trace, eng.nodes, time.monotonic() - start)

