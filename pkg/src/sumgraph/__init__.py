"""Sum graphs: induced graphs, labelings, sequence covers, bounded search and structural refutation."""

from .errors import FormatError, InvalidLabelingError, SizeLimitError, SumGraphError
from .graph import Mode, SumGraph, canonical_form, equivalence_classes, equivalent, isomorphic
from .induction import LabelBag, InducedGraph, c2_of_A, expand_cliques, gen_A, gen_gap_graph, gen_standard, induce
from .labeling import Labeling, Violation, ViolationKind, is_minimal, normalize, terminals, validate

__version__ = "0.1.0"

__all__ = [
    "FormatError",
    "InducedGraph",
    "InvalidLabelingError",
    "LabelBag",
    "Labeling",
    "Mode",
    "SizeLimitError",
    "SumGraph",
    "SumGraphError",
    "Violation",
    "ViolationKind",
    "__version__",
    "c2_of_A",
    "canonical_form",
    "equivalence_classes",
    "equivalent",
    "expand_cliques",
    "gen_A",
    "gen_gap_graph",
    "gen_standard",
    "induce",
    "is_minimal",
    "isomorphic",
    "normalize",
    "terminals",
    "validate",
]
