"""Replay a refutation trace against a graph.

The checker shares no solving code with the engine: every leaf rebuilds
its equations from the assumptions on its path and eliminates them from
scratch. Reduced row echelon form is unique, so the label forms it gets
are the ones the engine saw.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from ..errors import FormatError
from ..graph import Mode, SumGraph, equivalence_classes, equivalent
from ..induction import InducedGraph
from .trace import (GUARANTOR, INCONSISTENT, INTEGRALITY, NON_EQ, ONE_CLASS, POSITIVITY, SEQ_PROPER,
                    RefutationTrace, TraceNode)


def _eliminate(n: int, equations: list[tuple[dict[int, int], int]]) -> list[tuple[Fraction, ...]] | None:
    """Label forms ``(coef per label..., constant)`` implied by the equations, or None if unsolvable."""
    m = [[Fraction(0)] * (n + 1) for _ in equations]
    for i, (coeffs, rhs) in enumerate(equations):
        for v, a in coeffs.items():
            m[i][v] += a
        m[i][n] = Fraction(rhs)
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pr = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = m[r][col]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    for i in range(r, len(m)):
        if m[i][n] != 0:
            return None
    forms: list[tuple[Fraction, ...]] = []
    where = {col: i for i, col in enumerate(pivots)}
    for v in range(n):
        out = [Fraction(0)] * (n + 1)
        if v in where:
            row = m[where[v]]
            for j in range(n):
                if j != v and row[j] != 0:
                    out[j] = -row[j]
            out[n] = row[n]
        else:
            out[v] = Fraction(1)
        forms.append(tuple(out))
    return forms


def _equation(a: dict, n: int) -> tuple[dict[int, int], int]:
    kind = a.get("kind")
    if kind == "one":
        x = _vertex(a.get("vertex"), n)
        return {x: 1}, 1
    if kind == "sum":
        edge = a.get("edge")
        if not isinstance(edge, list) or len(edge) != 2:
            raise FormatError("sum assumption needs an edge pair")
        u, v = (_vertex(e, n) for e in edge)
        w = _vertex(a.get("guarantor"), n)
        coeffs = {w: 1}
        coeffs[u] = coeffs.get(u, 0) - 1
        coeffs[v] = coeffs.get(v, 0) - 1
        return coeffs, 0
    raise FormatError(f"unknown assumption kind {kind!r}")


def _vertex(x: Any, n: int) -> int:
    if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
        raise FormatError(f"bad vertex {x!r} in trace")
    return x


def _adjacent(G: SumGraph, u: int, v: int) -> bool:
    if u == v:
        return G.mode is Mode.LOOPS and G.has_loop(u)
    return G.has_edge(u, v)


def _plus(f: tuple, g: tuple) -> tuple:
    return tuple(a + b for a, b in zip(f, g))


def _leaf_holds(G: SumGraph, c: dict, equations: list) -> bool:
    n = G.vertex_count
    forms = _eliminate(n, equations)
    lemma = c.get("lemma")
    if lemma == INCONSISTENT:
        return forms is None
    if forms is None:
        return False
    if lemma == POSITIVITY:
        f = forms[_vertex(c.get("vertex"), n)]
        return all(a <= 0 for a in f[:-1]) and f[-1] + sum(f[:-1]) < 1
    if lemma == INTEGRALITY:
        f = forms[_vertex(c.get("vertex"), n)]
        return not any(f[:-1]) and f[-1].denominator != 1
    if lemma == NON_EQ:
        pair = c.get("vertices")
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError("NonEq leaf needs two vertices")
        a, b = (_vertex(x, n) for x in pair)
        return a != b and not equivalent(G, a, b) and forms[a] == forms[b]
    if lemma == SEQ_PROPER:
        pair = c.get("pair")
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError("SeqProper leaf needs a vertex pair")
        u, v = (_vertex(x, n) for x in pair)
        w = _vertex(c.get("guarantor"), n)
        if u == v and G.mode is not Mode.LOOPS:
            return False
        return not _adjacent(G, u, v) and _plus(forms[u], forms[v]) == forms[w]
    return False


def _node_ok(G: SumGraph, node: TraceNode, equations: list) -> bool:
    n = G.vertex_count
    if node.rule is None:
        if node.children or node.contradiction is None:
            return False
        return _leaf_holds(G, node.contradiction, equations)
    if node.rule != GUARANTOR or node.edge is None:
        return False
    u, v = (_vertex(x, n) for x in node.edge)
    if not _adjacent(G, u, v):
        return False
    seen: list[int] = []
    for child in node.children:
        a = child.assumption
        if not isinstance(a, dict) or a.get("kind") != "sum" or a.get("edge") != [u, v]:
            return False
        seen.append(_vertex(a.get("guarantor"), n))
    if sorted(seen) != [w for w in range(n) if w != u and w != v]:
        return False
    return all(_node_ok(G, child, equations + [_equation(child.assumption, n)]) for child in node.children)


def check_trace(G: InducedGraph | SumGraph, trace: RefutationTrace | dict | str) -> bool:
    """True iff every split in ``trace`` is exhaustive and every leaf contradiction re-derives on ``G``.

    Raises :class:`~sumgraph.errors.FormatError` for a trace that does not
    parse; a trace that parses but does not prove anything returns False.
    """
    graph = G.graph if isinstance(G, InducedGraph) else G
    if isinstance(trace, str):
        trace = RefutationTrace.loads(trace)
    elif isinstance(trace, dict):
        trace = RefutationTrace.from_json(trace)
    n = graph.vertex_count
    if trace.vertex_count != n or trace.mode is not graph.mode:
        return False
    root = trace.root
    if root.rule != ONE_CLASS or root.assumption is not None:
        return False
    covered: set[int] = set()
    blocks = equivalence_classes(graph)
    where = {v: i for i, b in enumerate(blocks) for v in b}
    for child in root.children:
        a = child.assumption
        if not isinstance(a, dict) or a.get("kind") != "one":
            return False
        covered.add(where[_vertex(a.get("vertex"), n)])
    if covered != set(range(len(blocks))):
        return False
    return all(_node_ok(graph, child, [_equation(child.assumption, n)]) for child in root.children)
