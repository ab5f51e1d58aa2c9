"""Arithmetic-sequence covers of a label-set, one per generator vertex.

For a valid labeling and a generator ``v`` with label ``g``, every label of
a neighbour of ``v`` extends to ``a, a+g, a+2g, ...`` inside the label-set
until a terminal (non-neighbour) label is hit. The resulting
``g``-sequences are disjoint and there are at most as many of them as
``v`` has terminals.

With loops, a generator carrying a loop is not its own terminal, so its
cover never contains the improper singleton ``(g)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import InvalidLabelingError
from .labeling import Labeling, terminals, validate


@dataclass(frozen=True)
class ArithSequence:
    start: int
    difference: int
    length: int
    improper: bool = False

    def __post_init__(self) -> None:
        if self.start < 1 or self.difference < 1 or self.length < 1:
            raise ValueError(f"invalid arithmetic sequence {self!r}")

    @property
    def last(self) -> int:
        return self.start + (self.length - 1) * self.difference

    @property
    def singleton(self) -> bool:
        return self.length == 1

    def elements(self) -> tuple[int, ...]:
        return tuple(self.start + i * self.difference for i in range(self.length))

    def __contains__(self, x: object) -> bool:
        if not isinstance(x, int) or x < self.start or x > self.last:
            return False
        return (x - self.start) % self.difference == 0

    def render(self) -> str:
        tag = "[improper]" if self.improper else "[terminal]"
        return f"{self.start} +{self.difference}×{self.length - 1} → {self.last} {tag}"


@dataclass(frozen=True)
class CoverDescription:
    generator: int
    generator_label: int
    sequences: tuple[ArithSequence, ...]
    terminal_labels: frozenset[int]
    terminal_count: int

    def elements(self) -> frozenset[int]:
        return frozenset(x for s in self.sequences for x in s.elements())

    def render(self) -> str:
        head = f"generator {self.generator} (label {self.generator_label}, {self.terminal_count} terminals)"
        return "\n".join([head, *(s.render() for s in self.sequences)])

    def to_json(self) -> dict:
        return {
            "generator": self.generator,
            "generator_label": self.generator_label,
            "terminal_count": self.terminal_count,
            "terminal_labels": sorted(self.terminal_labels),
            "sequences": [
                {"start": s.start, "difference": s.difference, "length": s.length,
                 "last": s.last, "improper": s.improper}
                for s in self.sequences
            ],
        }


def build_cover(L: Labeling, v: int) -> CoverDescription:
    """Cover of the distinct labels of ``L`` by ``L[v]``-sequences.

    Chains start from the lowest uncovered neighbour label; uncovered
    proper-terminal labels become singletons in ascending order, and the
    generator's own label, if still uncovered, comes last.
    """
    if validate(L):
        raise InvalidLabelingError("build_cover needs a valid labeling")
    G = L.graph
    g = L.labels[v]
    term = terminals(L, v)
    inner = {L.labels[u] for u in G.neighbors[v]}
    proper_labels = {L.labels[w] for w in term.proper}
    terminal_labels = set(proper_labels)
    if term.improper:
        terminal_labels.add(g)
    distinct = set(L.labels)

    covered: set[int] = set()
    seqs: list[ArithSequence] = []
    for a in sorted(inner):
        if a in covered:
            continue
        x, length = a, 1
        while x in inner:
            x += g
            length += 1
            assert x in distinct, "edge-number missing from a valid labeling"
        seq = ArithSequence(a, g, length)
        assert covered.isdisjoint(seq.elements())
        covered.update(seq.elements())
        seqs.append(seq)
    for w in sorted(proper_labels - covered):
        seqs.append(ArithSequence(w, g, 1))
        covered.add(w)
    if term.improper and g not in covered:
        seqs.append(ArithSequence(g, g, 1, improper=True))
        covered.add(g)
    assert covered == distinct, "cover does not match the label-set"
    return CoverDescription(v, g, tuple(seqs), frozenset(terminal_labels), term.count)


def mergeable(t_i: int, t_j: int, non_equiv_count: int) -> bool:
    """Threshold test: at least ``2 (t_i - 1)(t_j - 1) + 3`` non-equivalent vertices."""
    if t_i < 1 or t_j < 1:
        raise ValueError("terminal counts must be positive")
    return non_equiv_count >= 2 * (t_i - 1) * (t_j - 1) + 3


class SharedRun(NamedTuple):
    first: ArithSequence
    second: ArithSequence
    smallest: tuple[int, int, int]


def shared_run(c1: CoverDescription, c2: CoverDescription) -> SharedRun | None:
    """First pair of sequences (in cover order) sharing at least three elements."""
    if c1.elements() != c2.elements():
        raise ValueError("covers describe different label-sets")
    for s1 in c1.sequences:
        e1 = set(s1.elements())
        if len(e1) < 3:
            continue
        for s2 in c2.sequences:
            common = sorted(e1.intersection(s2.elements()))
            if len(common) >= 3:
                return SharedRun(s1, s2, (common[0], common[1], common[2]))
    return None


def merge_relations(t1: int, t2: int) -> frozenset[tuple[int, int]]:
    """Coprime ``(j, k)`` with ``j <= t1 - 1`` and ``k <= t2 - 1``.

    Each pair stands for the candidate relation ``k * d1 == j * d2`` between
    the two generator labels.
    """
    if t1 < 2 or t2 < 2:
        raise ValueError("terminal counts must be at least 2")
    return frozenset((j, k) for j in range(1, t1) for k in range(1, t2) if math.gcd(j, k) == 1)


def relation_holds(j: int, k: int, d1: int, d2: int) -> bool:
    return k * d1 == j * d2


def merge_one_bound(t2: int) -> int:
    """Upper bound on the partner label when one generator is labeled 1."""
    if t2 < 2:
        raise ValueError("terminal count must be at least 2")
    return t2 - 1


def all_covers(L: Labeling) -> Iterator[CoverDescription]:
    for v in range(L.graph.vertex_count):
        yield build_cover(L, v)
