"""Bounded-exhaustive search for sum labelings.

All nonexistence answers are relative to the label bound ``max_label``: no
global bound on the labels a sum graph needs is known, so the search never
claims more than "none with every label <= B".
"""

from __future__ import annotations

import enum
import itertools
import os
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from ..errors import SizeLimitError, SumGraphError
from ..graph import Mode, SumGraph, canonical_form, class_index
from ..induction import InducedGraph, LabelBag, induce
from ..labeling import Labeling, is_minimal, label_gcd, validate
from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # pragma: no cover - depends on the build
    _ckernel = None

#: Name of the kernel used by default: ``"compiled"`` or ``"python"``.
DEFAULT_KERNEL = "compiled" if (_ckernel is not None and os.environ.get("SUMGRAPH_PURE") != "1") else "python"

BUDGET_ENV = "SUMGRAPH_TIME_BUDGET"
DEFAULT_TIME_BUDGET = 60.0


def default_time_budget() -> float:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_TIME_BUDGET
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be a number of seconds, got {raw!r}") from None


def available_kernels() -> list[str]:
    return ["python"] + (["compiled"] if _ckernel is not None else [])


class Status(enum.Enum):
    FOUND = "Found"
    EXHAUSTED = "ExhaustedWithinBound"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters.

    ``max_results`` of 0 means "all". ``time_budget`` is in seconds; ``None``
    picks up :func:`default_time_budget` and ``0`` disables the limit.
    """

    max_label: int
    require_label_one: bool = False
    require_injective: bool = False
    mode: Mode | None = None
    max_results: int = 1
    time_budget: float | None = None
    node_limit: int = 0

    def __post_init__(self) -> None:
        if self.max_label < 1:
            raise ValueError("max_label must be positive")
        if self.max_results < 0:
            raise ValueError("max_results must be non-negative")

    def budget_seconds(self) -> float:
        return default_time_budget() if self.time_budget is None else float(self.time_budget)

    def to_json(self) -> dict:
        return {
            "max_label": self.max_label,
            "require_label_one": self.require_label_one,
            "require_injective": self.require_injective,
            "mode": self.mode.value if self.mode else None,
            "max_results": self.max_results,
            "time_budget": self.budget_seconds(),
            "node_limit": self.node_limit,
        }


@dataclass
class SearchOutcome:
    status: Status
    labelings: list[Labeling]
    nodes_explored: int
    config: SearchConfig
    kernel: str
    elapsed: float = 0.0
    budget_hit: bool = False

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "bound": self.config.max_label,
            "labelings": [list(L.labels) for L in self.labelings],
            "nodes_explored": self.nodes_explored,
            "budget_hit": self.budget_hit,
            "kernel": self.kernel,
        }


@dataclass(frozen=True)
class _Prepared:
    n: int
    adj: list[int]
    loops: bool
    cls: list[int]
    prev_in_class: list[int]
    priority: list[int]
    nbr_classes: list[int]
    classes: list[list[int]] = field(default_factory=list)


def _prepare(G: SumGraph) -> _Prepared:
    n = G.vertex_count
    cls = class_index(G)
    prev = [-1] * n
    last: dict[int, int] = {}
    for v in range(n):
        if cls[v] in last:
            prev[v] = last[cls[v]]
        last[cls[v]] = v
    nbr_classes = [len({cls[u] for u in G.neighbors[v]}) for v in range(n)]
    priority = sorted(range(n), key=lambda v: (-nbr_classes[v], -G.degree(v), v))
    adj = [1 if u in G.neighbors[v] else 0 for v in range(n) for u in range(n)]
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(cls[v], []).append(v)
    return _Prepared(n, adj, G.mode is Mode.LOOPS, cls, prev, priority, nbr_classes,
                     [classes[c] for c in sorted(classes)])


def _canonical_labels(prep: _Prepared, labels: list[int]) -> tuple[int, ...]:
    """Sort labels inside each equivalence class along vertex order."""
    out = list(labels)
    for block in prep.classes:
        vals = sorted(labels[v] for v in block)
        for v, x in zip(block, vals):
            out[v] = x
    return tuple(out)


def _kernel_run(kernel: str) -> Callable:
    if kernel == "python":
        return _pykernel.run
    if kernel == "compiled":
        if _ckernel is None:
            raise SumGraphError("compiled kernel is not available in this build")
        return _ckernel.run
    raise ValueError(f"unknown kernel {kernel!r}")


def find_labelings(G: SumGraph, cfg: SearchConfig, kernel: str | None = None) -> SearchOutcome:
    """Search for sum labelings of ``G`` with every label at most ``cfg.max_label``.

    Without ``require_label_one`` the labelings are reported divided by
    their gcd. Labelings are deduplicated by label multiset (two labelings
    with the same multiset differ by an automorphism of ``G``) and are
    returned with labels sorted along vertex order inside each equivalence
    class.
    """
    if cfg.mode is not None and cfg.mode is not G.mode:
        raise ValueError(f"config mode {cfg.mode.value} does not match graph mode {G.mode.value}")
    if cfg.require_injective and cfg.max_label < G.vertex_count:
        raise ValueError("an injective search needs max_label >= vertex count")
    kname = kernel or DEFAULT_KERNEL
    run = _kernel_run(kname)
    prep = _prepare(G)
    found: list[Labeling] = []
    seen: set[tuple[int, ...]] = set()

    def emit(raw: list[int]) -> bool:
        labels = _canonical_labels(prep, raw)
        if not cfg.require_label_one:
            g = label_gcd(labels)
            if g > 1:
                labels = tuple(x // g for x in labels)
        key = tuple(sorted(labels))
        if key in seen:
            return False
        L = Labeling(G, labels)
        bad = validate(L)
        if bad:
            raise AssertionError(f"kernel emitted an invalid labeling {labels}: {bad[:3]}")
        if cfg.require_label_one and not is_minimal(L):
            raise AssertionError("kernel emitted a labeling without label 1")
        if cfg.require_injective and not L.injective:
            raise AssertionError("kernel emitted a non-injective labeling")
        seen.add(key)
        found.append(L)
        return 0 < cfg.max_results <= len(found)

    start = time.monotonic()
    status, nodes = run(prep.n, prep.adj, prep.loops, prep.cls, prep.prev_in_class, prep.priority,
                        prep.nbr_classes, cfg.max_label, cfg.require_label_one, cfg.require_injective,
                        emit, cfg.budget_seconds(), cfg.node_limit)
    elapsed = time.monotonic() - start
    budget_hit = status == _pykernel.BUDGET
    if found:
        result = Status.FOUND
    elif budget_hit:
        result = Status.BUDGET_EXCEEDED
    else:
        result = Status.EXHAUSTED
    return SearchOutcome(result, found, nodes, cfg, kname, elapsed, budget_hit)


@dataclass
class MinimalResult:
    found: bool
    labeling: Labeling | None
    bound: int
    outcome: SearchOutcome

    @property
    def status(self) -> Status:
        return self.outcome.status

    def describe(self) -> str:
        if self.found:
            return f"Found minimal labeling {list(self.labeling.labels)}"
        if self.outcome.status is Status.BUDGET_EXCEEDED:
            return f"BudgetExceeded before exhausting labels <= {self.bound}"
        return f"NoneWithinBound (labels <= {self.bound})"


def has_minimal_labeling_bounded(G: SumGraph, max_label: int, time_budget: float | None = None,
                                 kernel: str | None = None) -> MinimalResult:
    cfg = SearchConfig(max_label, require_label_one=True, max_results=1, time_budget=time_budget)
    out = find_labelings(G, cfg, kernel)
    lab = out.labelings[0] if out.labelings else None
    return MinimalResult(out.found, lab, max_label, out)


class SigmaNotFound(SumGraphError):
    pass


@dataclass
class SigmaResult:
    sigma: int
    witness: Labeling
    exhaustive_below: bool
    bound: int
    per_count: list[SearchOutcome]

    def to_json(self) -> dict:
        return {
            "sigma": self.sigma,
            "witness": list(self.witness.labels),
            "exhaustive_below": self.exhaustive_below,
            "bound": self.bound,
            "per_count": [
                {"isolates": i, "status": o.status.value, "nodes": o.nodes_explored}
                for i, o in enumerate(self.per_count)
            ],
        }


def sum_number_bounded(G: SumGraph, max_isolates: int, max_label: int,
                       time_budget: float | None = None, kernel: str | None = None) -> SigmaResult:
    """Least number of isolated vertices making ``G`` a sum graph with labels <= ``max_label``.

    ``exhaustive_below`` is true when every smaller count was fully
    exhausted (not cut off by the budget), so the value is exact relative
    to the bound.
    """
    if G.mode is not Mode.SIMPLE:
        raise ValueError("sum numbers are defined for loopless graphs")
    if any(G.is_isolated(v) for v in range(G.vertex_count)):
        raise ValueError("strip isolated vertices before computing the sum number")
    outcomes: list[SearchOutcome] = []
    for s in range(max_isolates + 1):
        H = G.with_isolates(s)
        cfg = SearchConfig(max_label, require_injective=True, max_results=1, time_budget=time_budget)
        out = find_labelings(H, cfg, kernel)
        outcomes.append(out)
        if out.found:
            exhaustive = all(o.status is Status.EXHAUSTED for o in outcomes[:-1])
            return SigmaResult(s, out.labelings[0], exhaustive, max_label, outcomes)
    raise SigmaNotFound(f"no labeling with at most {max_isolates} isolates and labels <= {max_label}")


# brute-force oracle

ORACLE_MAX_VERTICES = 7
ORACLE_MAX_LABEL = 30


def oracle_enumerate(vertex_count: int, max_label: int, mode: Mode = Mode.SIMPLE,
                     injective: bool = False) -> Iterator[tuple[LabelBag, InducedGraph]]:
    """Every bag of ``vertex_count`` values in ``1..max_label`` with its induced graph."""
    if vertex_count > ORACLE_MAX_VERTICES or max_label > ORACLE_MAX_LABEL:
        raise SizeLimitError(
            f"oracle limited to {ORACLE_MAX_VERTICES} vertices and labels <= {ORACLE_MAX_LABEL}")
    if vertex_count < 0 or max_label < 1:
        raise ValueError("vertex_count must be >= 0 and max_label >= 1")
    pick = itertools.combinations if injective else itertools.combinations_with_replacement
    for combo in pick(range(1, max_label + 1), vertex_count):
        bag = LabelBag(combo)
        yield bag, induce(bag, mode)


def oracle_forms(vertex_count: int, max_label: int, mode: Mode = Mode.SIMPLE,
                 injective: bool = False) -> set[bytes]:
    """Canonical forms of every graph the oracle reaches."""
    return {canonical_form(ig.graph) for _, ig in oracle_enumerate(vertex_count, max_label, mode, injective)}
