"""Graphs induced by multisets of positive integers, and the graph families built from them."""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import FormatError
from .graph import Mode, SumGraph


@dataclass(frozen=True)
class LabelBag:
    """Finite multiset of positive integers, kept sorted."""

    values: tuple[int, ...]

    def __init__(self, values: Iterable[int] = ()):
        vals = tuple(sorted(int(x) for x in values))
        if vals and vals[0] < 1:
            raise ValueError(f"bag values must be positive, got {vals[0]}")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __contains__(self, x: object) -> bool:
        return x in self.counts

    @property
    def counts(self) -> Counter:
        return Counter(self.values)

    def distinct(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.values)))

    def multiplicity(self, x: int) -> int:
        return self.values.count(x)

    def loop_values(self) -> tuple[int, ...]:
        """Values ``i`` with ``2i`` in the bag (the vertices that carry loops)."""
        present = set(self.values)
        return tuple(i for i in self.distinct() if 2 * i in present)

    def __repr__(self) -> str:
        return f"LabelBag({list(self.values)})"


@dataclass(frozen=True)
class InducedGraph:
    """A graph together with the labels that induce it.

    ``labels[v]`` is the value inducing vertex ``v``; ``psi[i]`` lists the
    vertices induced by value ``i``.
    """

    graph: SumGraph
    labels: tuple[int, ...]
    psi: Mapping[int, tuple[int, ...]]

    @property
    def bag(self) -> LabelBag:
        return LabelBag(self.labels)

    @property
    def mode(self) -> Mode:
        return self.graph.mode


def induce(S: LabelBag | Iterable[int], mode: Mode = Mode.SIMPLE) -> InducedGraph:
    """Build ``G_S``: copies of the values become vertices (sorted by value).

    Distinct vertices ``u != v`` are adjacent iff their values sum to a member
    of ``S``; in ``Mode.LOOPS`` a vertex has a loop iff twice its value is in ``S``.
    """
    bag = S if isinstance(S, LabelBag) else LabelBag(S)
    labels = bag.values
    present = set(labels)
    n = len(labels)
    adj: list[set[int]] = [set() for _ in range(n)]
    for u in range(n):
        for v in range(u + 1, n):
            if labels[u] + labels[v] in present:
                adj[u].add(v)
                adj[v].add(u)
        if mode is Mode.LOOPS and 2 * labels[u] in present:
            adj[u].add(u)
    psi: dict[int, list[int]] = {}
    for v, x in enumerate(labels):
        psi.setdefault(x, []).append(v)
    graph = SumGraph(n, tuple(frozenset(a) for a in adj), mode)
    return InducedGraph(graph, labels, {k: tuple(v) for k, v in psi.items()})


def gen_A(n: int) -> InducedGraph:
    """``A_n``: the loops graph induced by ``{2, ..., n} + {n + 2}``."""
    if n < 3:
        raise ValueError(f"A_n needs n >= 3, got {n}")
    return induce(LabelBag([*range(2, n + 1), n + 2]), Mode.LOOPS)


def gen_gap_graph(k: int, gap: int) -> InducedGraph:
    """Loops graph induced by ``{2, ..., k}`` with ``gap`` removed (``k - 2`` vertices)."""
    if k < 2 or not 2 <= gap <= k:
        raise ValueError(f"gap must satisfy 2 <= gap <= k, got k={k}, gap={gap}")
    return induce(LabelBag(x for x in range(2, k + 1) if x != gap), Mode.LOOPS)


def expand_cliques(S: LabelBag | Iterable[int], multiplicities: Mapping[int, int]) -> LabelBag:
    """Raise the multiplicity of each loop-carrying value of ``S``.

    Every value ``i`` with ``2i`` in ``S`` must be a key, mapped to a
    multiplicity of at least 2; no other keys are allowed. The loopless
    graph induced by the result is a member of the clique expansion of the
    loops graph induced by ``S``.
    """
    bag = S if isinstance(S, LabelBag) else LabelBag(S)
    loops = set(bag.loop_values())
    for i, m in multiplicities.items():
        if i not in loops:
            raise ValueError(f"value {i} does not carry a loop (2*{i} not in the bag)")
        if m < 2:
            raise ValueError(f"multiplicity for loop value {i} must be >= 2, got {m}")
    missing = loops - set(multiplicities)
    if missing:
        raise ValueError(f"loop values without a multiplicity: {sorted(missing)}")
    out: list[int] = []
    for x in bag.distinct():
        out.extend([x] * (multiplicities[x] if x in multiplicities else bag.multiplicity(x)))
    return LabelBag(out)


def clique_expansion(S: LabelBag | Iterable[int], k: int = 2) -> LabelBag:
    """The bag of ``C^k``: every loop-carrying value gets multiplicity ``k``."""
    bag = S if isinstance(S, LabelBag) else LabelBag(S)
    return expand_cliques(bag, {i: k for i in bag.loop_values()})


def multiplicity_maps(S: LabelBag | Iterable[int], cap: int) -> Iterator[dict[int, int]]:
    """All multiplicity maps over the loop values of ``S`` with entries in ``2..cap``."""
    bag = S if isinstance(S, LabelBag) else LabelBag(S)
    loops = bag.loop_values()
    if cap < 2 and loops:
        return
    for combo in itertools.product(range(2, cap + 1), repeat=len(loops)):
        yield dict(zip(loops, combo))


def c2_of_A(n: int) -> InducedGraph:
    """Loopless graph induced by the ``C^2`` bag of ``A_n``."""
    return induce(clique_expansion(gen_A(n).bag, 2), Mode.SIMPLE)


class Family(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"


def gen_standard(family: Family | str, n: int, extra_isolates: int = 0) -> SumGraph:
    """Path, cycle, complete graph or star on ``n`` vertices, plus isolated vertices."""
    fam = Family(family) if isinstance(family, str) else family
    if n < 1:
        raise ValueError("n must be positive")
    if fam is Family.PATH:
        edges = [(i, i + 1) for i in range(n - 1)]
    elif fam is Family.CYCLE:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif fam is Family.COMPLETE:
        edges = list(itertools.combinations(range(n), 2))
    else:
        edges = [(0, i) for i in range(1, n)]
    return SumGraph.from_edges(n, edges, Mode.SIMPLE).with_isolates(extra_isolates)


# bag files

def parse_bag(text: str, source: str | None = None) -> LabelBag:
    """Whitespace separated positive integers; ``#`` starts a comment."""
    values: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        for tok in raw.split("#", 1)[0].split():
            try:
                x = int(tok)
            except ValueError:
                raise FormatError(f"not an integer: {tok!r}", lineno, source) from None
            if x < 1:
                raise FormatError(f"bag values must be positive, got {x}", lineno, source)
            values.append(x)
    return LabelBag(values)


def format_bag(bag: LabelBag) -> str:
    return " ".join(str(x) for x in bag.values) + "\n"
