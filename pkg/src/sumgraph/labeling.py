"""Labelings of a fixed graph and the sum-graph validity check."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, NamedTuple, Sequence

from .errors import FormatError, InvalidLabelingError
from .graph import Mode, SumGraph


@dataclass(frozen=True)
class Labeling:
    graph: SumGraph
    labels: tuple[int, ...]

    def __init__(self, graph: SumGraph, labels: Iterable[int]):
        labs = tuple(int(x) for x in labels)
        if len(labs) != graph.vertex_count:
            raise ValueError(f"expected {graph.vertex_count} labels, got {len(labs)}")
        if any(x < 1 for x in labs):
            raise ValueError("labels must be positive integers")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "labels", labs)

    @property
    def injective(self) -> bool:
        return len(set(self.labels)) == len(self.labels)

    def label_set(self) -> frozenset[int]:
        return frozenset(self.labels)

    def scaled(self, c: int) -> "Labeling":
        if c < 1:
            raise ValueError("scale factor must be positive")
        return Labeling(self.graph, (c * x for x in self.labels))

    def __getitem__(self, v: int) -> int:
        return self.labels[v]


class ViolationKind(enum.Enum):
    UNGUARANTEED_EDGE = "UnguaranteedEdge"
    MISSING_EDGE = "MissingEdge"


class Violation(NamedTuple):
    kind: ViolationKind
    pair: tuple[int, int]
    edge_number: int


def validate(L: Labeling) -> list[Violation]:
    """Every violation of the sum condition, in pair order.

    Empty iff ``L`` is a sum labeling of its graph. In loops mode the pairs
    ``(v, v)`` are checked too.
    """
    G = L.graph
    labels = L.labels
    M = set(labels)
    out: list[Violation] = []
    loops = G.mode is Mode.LOOPS
    for u in range(G.vertex_count):
        for v in range(u if loops else u + 1, G.vertex_count):
            s = labels[u] + labels[v]
            edge = G.has_edge(u, v)
            if edge and s not in M:
                out.append(Violation(ViolationKind.UNGUARANTEED_EDGE, (u, v), s))
            elif not edge and s in M:
                out.append(Violation(ViolationKind.MISSING_EDGE, (u, v), s))
    return out


def is_valid(L: Labeling) -> bool:
    return not validate(L)


class Terminals(NamedTuple):
    proper: frozenset[int]
    improper: bool

    @property
    def count(self) -> int:
        return len(self.proper) + (1 if self.improper else 0)


def terminals_of(G: SumGraph, v: int) -> Terminals:
    """Non-neighbours of ``v``; ``v`` itself is improper unless it carries a loop."""
    nbrs = G.neighbors[v]
    proper = frozenset(w for w in range(G.vertex_count) if w != v and w not in nbrs)
    return Terminals(proper, v not in nbrs)


def terminals(L: Labeling, v: int) -> Terminals:
    return terminals_of(L.graph, v)


def label_gcd(labels: Sequence[int]) -> int:
    return reduce(math.gcd, labels, 0)


def normalize(L: Labeling) -> Labeling:
    """Divide a valid labeling by the gcd of its labels."""
    bad = validate(L)
    if bad:
        raise InvalidLabelingError(f"cannot normalize an invalid labeling ({len(bad)} violations)")
    g = label_gcd(L.labels)
    if g <= 1:
        return L
    return Labeling(L.graph, (x // g for x in L.labels))


def is_minimal(L: Labeling) -> bool:
    return 1 in L.labels


# labeling files

def parse_labeling(text: str, graph: SumGraph, source: str | None = None) -> Labeling:
    """One positive integer per non-blank line, in vertex order."""
    labels: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            x = int(line)
        except ValueError:
            raise FormatError(f"expected one integer per line, got {line!r}", lineno, source) from None
        if x < 1:
            raise FormatError(f"labels must be positive, got {x}", lineno, source)
        labels.append(x)
    if len(labels) != graph.vertex_count:
        raise FormatError(f"expected {graph.vertex_count} labels, found {len(labels)}", None, source)
    return Labeling(graph, labels)


def format_labeling(L: Labeling) -> str:
    return "".join(f"{x}\n" for x in L.labels)
