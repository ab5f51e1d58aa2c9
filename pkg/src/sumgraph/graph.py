"""Small undirected graphs with optional self-loops.

A :class:`SumGraph` is immutable. Vertices are ``0..n-1``. The adjacency is
stored as one ``frozenset`` of neighbours per vertex; in ``Mode.LOOPS`` a
vertex with a loop lists itself among its neighbours.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import FormatError, SizeLimitError

#: Largest graph accepted by :func:`canonical_form`.
MAX_CANONICAL_VERTICES = 64
#: Largest graph accepted by the brute-force canonical form.
MAX_NAIVE_VERTICES = 10


class Mode(enum.Enum):
    LOOPS = "loops"
    SIMPLE = "simple"

    @classmethod
    def parse(cls, text: str) -> "Mode":
        key = text.strip().lower()
        aliases = {"loops": cls.LOOPS, "withloops": cls.LOOPS, "with-loops": cls.LOOPS,
                   "simple": cls.SIMPLE, "loopless": cls.SIMPLE}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown graph mode {text!r} (expected 'loops' or 'simple')") from None


@dataclass(frozen=True)
class SumGraph:
    """Undirected graph on ``vertex_count`` vertices, with a loop mode flag."""

    vertex_count: int
    neighbors: tuple[frozenset[int], ...]
    mode: Mode = Mode.SIMPLE
    _edge_count: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise ValueError("vertex_count must be non-negative")
        if len(self.neighbors) != n:
            raise ValueError("neighbors must have one entry per vertex")
        count = 0
        for v, nbrs in enumerate(self.neighbors):
            for u in nbrs:
                if not 0 <= u < n:
                    raise ValueError(f"neighbor {u} of vertex {v} out of range")
                if v not in self.neighbors[u]:
                    raise ValueError(f"adjacency not symmetric for {v}-{u}")
                if u == v and self.mode is Mode.SIMPLE:
                    raise ValueError(f"loop at vertex {v} in a simple graph")
                if u >= v:
                    count += 1
        object.__setattr__(self, "_edge_count", count)

    # construction helpers

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], mode: Mode = Mode.SIMPLE) -> "SumGraph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for {n} vertices")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj), mode)

    @classmethod
    def empty(cls, n: int = 0, mode: Mode = Mode.SIMPLE) -> "SumGraph":
        return cls(n, tuple(frozenset() for _ in range(n)), mode)

    # queries

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def edge_count(self) -> int:
        """Number of edges, loops included."""
        return self._edge_count

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def has_loop(self, v: int) -> bool:
        return v in self.neighbors[v]

    def degree(self, v: int) -> int:
        """Number of neighbours; a loop counts once."""
        return len(self.neighbors[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u <= v``, in lexicographic order."""
        for u in range(self.vertex_count):
            for v in sorted(self.neighbors[u]):
                if v >= u:
                    yield (u, v)

    def is_isolated(self, v: int) -> bool:
        return not self.neighbors[v]

    def permuted(self, perm: Sequence[int]) -> "SumGraph":
        """Relabel vertex ``v`` as ``perm[v]``."""
        n = self.vertex_count
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of range(n)")
        adj: list[frozenset[int]] = [frozenset()] * n
        for v in range(n):
            adj[perm[v]] = frozenset(perm[u] for u in self.neighbors[v])
        return SumGraph(n, tuple(adj), self.mode)

    def with_isolates(self, k: int) -> "SumGraph":
        """Append ``k`` isolated vertices."""
        if k < 0:
            raise ValueError("k must be non-negative")
        return SumGraph(self.vertex_count + k, self.neighbors + (frozenset(),) * k, self.mode)

    def without_isolates(self) -> tuple["SumGraph", int]:
        """Drop isolated vertices; returns the reduced graph and how many were dropped."""
        keep = [v for v in range(self.vertex_count) if self.neighbors[v]]
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(frozenset(index[u] for u in self.neighbors[v]) for v in keep)
        return SumGraph(len(keep), adj, self.mode), self.vertex_count - len(keep)

    def adjacency_matrix(self) -> list[list[int]]:
        n = self.vertex_count
        return [[1 if u in self.neighbors[v] else 0 for u in range(n)] for v in range(n)]


# equivalence

def _check_vertex(G: SumGraph, v: int) -> None:
    if not isinstance(v, int) or not 0 <= v < G.vertex_count:
        raise IndexError(f"vertex {v!r} out of range for graph on {G.vertex_count} vertices")


def equivalent(G: SumGraph, u: int, v: int) -> bool:
    """Whether ``u`` and ``v`` have the same neighbourhood.

    Loopless graphs compare ``N(u) - {v}`` with ``N(v) - {u}``; graphs with
    loops compare ``N(u)`` and ``N(v)`` exactly.
    """
    _check_vertex(G, u)
    _check_vertex(G, v)
    if u == v:
        return True
    if G.mode is Mode.LOOPS:
        return G.neighbors[u] == G.neighbors[v]
    return G.neighbors[u] - {v} == G.neighbors[v] - {u}


def equivalence_classes(G: SumGraph) -> tuple[tuple[int, ...], ...]:
    """Partition of the vertices into maximal sets of pairwise equivalent vertices.

    Blocks are ordered by their smallest vertex. Transitivity is asserted on
    the instance rather than assumed.
    """
    blocks: list[list[int]] = []
    for v in range(G.vertex_count):
        for block in blocks:
            if equivalent(G, block[0], v):
                block.append(v)
                break
        else:
            blocks.append([v])
    for block in blocks:
        for a, b in itertools.combinations(block, 2):
            if not equivalent(G, a, b):
                raise AssertionError(f"equivalence not transitive at {a}, {b}")
    for b1, b2 in itertools.combinations(blocks, 2):
        if equivalent(G, b1[0], b2[0]):
            raise AssertionError(f"blocks {b1[0]} and {b2[0]} should have merged")
    return tuple(tuple(b) for b in blocks)


def class_index(G: SumGraph) -> list[int]:
    """Map each vertex to the index of its block in :func:`equivalence_classes`."""
    out = [0] * G.vertex_count
    for i, block in enumerate(equivalence_classes(G)):
        for v in block:
            out[v] = i
    return out


# canonical form

def _encode(G: SumGraph, order: Sequence[int]) -> bytes:
    """Pack the adjacency of ``G`` read along ``order`` (position -> vertex)."""
    n = G.vertex_count
    bits: list[int] = []
    for i in range(n):
        bits.append(1 if G.has_loop(order[i]) else 0)
    for i in range(n):
        nbrs = G.neighbors[order[i]]
        for j in range(i + 1, n):
            bits.append(1 if order[j] in nbrs else 0)
    packed = bytearray()
    for k in range(0, len(bits), 8):
        byte = 0
        for b in bits[k:k + 8]:
            byte = (byte << 1) | b
        packed.append(byte)
    head = bytes([1 if G.mode is Mode.LOOPS else 0]) + n.to_bytes(2, "big")
    return head + bytes(packed)


def _refine(G: SumGraph, colors: list[int]) -> list[int]:
    """Colour refinement to a stable partition; colours are dense ranks."""
    n = G.vertex_count
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in G.neighbors[v] if u != v)))
                for v in range(n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return colors
        ncolors = len(ranking)


def _individualize(colors: list[int], v: int) -> list[int]:
    keyed = [(c, 0 if u == v else 1) if c == colors[v] else (c, 0) for u, c in enumerate(colors)]
    ranking = {k: i for i, k in enumerate(sorted(set(keyed)))}
    return [ranking[k] for k in keyed]


def canonical_form(G: SumGraph) -> bytes:
    """Canonical byte encoding: equal for two graphs iff they are isomorphic.

    Colour refinement plus individualisation, exploring only one vertex out of
    each set of mutually equivalent vertices in the branching cell (swapping
    such twins is an automorphism that fixes the current partition).
    """
    n = G.vertex_count
    if n > MAX_CANONICAL_VERTICES:
        raise SizeLimitError(f"canonical_form supports at most {MAX_CANONICAL_VERTICES} vertices, got {n}")
    if n == 0:
        return _encode(G, [])
    start = [(1 if G.has_loop(v) else 0) * (n + 1) + G.degree(v) for v in range(n)]
    ranks = {c: i for i, c in enumerate(sorted(set(start)))}
    best: bytes | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        colors = _refine(G, colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            order = sorted(range(n), key=colors.__getitem__)
            code = _encode(G, order)
            if best is None or code < best:
                best = code
            return
        target = min((c for c in cells if len(cells[c]) > 1), key=lambda c: (len(cells[c]), c))
        tried: list[int] = []
        for v in cells[target]:
            if any(equivalent(G, v, t) for t in tried):
                continue
            tried.append(v)
            search(_individualize(colors, v))

    search([ranks[c] for c in start])
    assert best is not None
    return best


def canonical_form_naive(G: SumGraph) -> bytes:
    """Lexicographically least encoding over all vertex orders (test oracle)."""
    n = G.vertex_count
    if n > MAX_NAIVE_VERTICES:
        raise SizeLimitError(f"naive canonical form supports at most {MAX_NAIVE_VERTICES} vertices, got {n}")
    return min(_encode(G, order) for order in itertools.permutations(range(n)))


def isomorphic(G: SumGraph, H: SumGraph) -> bool:
    if G.mode is not H.mode:
        raise ValueError("cannot compare graphs of different modes")
    if G.vertex_count != H.vertex_count or G.edge_count != H.edge_count:
        return False
    if sorted(G.degree(v) for v in range(G.n)) != sorted(H.degree(v) for v in range(H.n)):
        return False
    return canonical_form(G) == canonical_form(H)


# text formats

def format_graph(G: SumGraph) -> str:
    """Text form: ``n mode`` then one ``u v`` line per edge (``u v`` equal for a loop)."""
    lines = [f"{G.vertex_count} {G.mode.value}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str, source: str | None = None) -> SumGraph:
    header: tuple[int, Mode] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise FormatError("header must be 'n mode'", lineno, source)
            try:
                n = int(parts[0])
                mode = Mode.parse(parts[1])
            except ValueError as exc:
                raise FormatError(str(exc), lineno, source) from None
            if n < 0:
                raise FormatError("vertex count must be non-negative", lineno, source)
            header = (n, mode)
            continue
        if len(parts) != 2:
            raise FormatError("edge line must be 'u v'", lineno, source)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"non-integer vertex in {line!r}", lineno, source) from None
        n, mode = header
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"vertex out of range 0..{n - 1}", lineno, source)
        if u == v and mode is Mode.SIMPLE:
            raise FormatError("loop in a simple graph", lineno, source)
        edges.append((u, v))
    if header is None:
        raise FormatError("missing header line", None, source)
    return SumGraph.from_edges(header[0], edges, header[1])


def to_dot(G: SumGraph, labels: Sequence[int] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(G.vertex_count):
        text = f"{v}" if labels is None else f"{v}: {labels[v]}"
        lines.append(f'  {v} [label="{text}"];')
    for u, v in G.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
