"""Refutation traces: JSON form and a plain-text rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from ..errors import FormatError
from ..graph import Mode
from .linear import form_from_json, render_form

# rule identifiers used at branching nodes
ONE_CLASS = "OneClass"
GUARANTOR = "Guarantor"

# contradiction identifiers used at leaves
INCONSISTENT = "Inconsistent"
POSITIVITY = "Positivity"
INTEGRALITY = "Integrality"
NON_EQ = "NonEq"
SEQ_PROPER = "SeqProper"

LEAF_LEMMAS = (INCONSISTENT, POSITIVITY, INTEGRALITY, NON_EQ, SEQ_PROPER)


@dataclass
class TraceNode:
    """One case of the proof.

    ``assumption`` is what this case adds to its parent (None at the root):
    ``{"kind": "one", "vertex": x}`` or
    ``{"kind": "sum", "edge": [u, v], "guarantor": w}``. Interior nodes
    carry the branching ``rule`` (and the ``edge`` it splits on); leaves
    carry the ``contradiction`` reached.
    """

    assumption: dict | None = None
    rule: str | None = None
    edge: tuple[int, int] | None = None
    children: list["TraceNode"] = field(default_factory=list)
    contradiction: dict | None = None

    @property
    def is_leaf(self) -> bool:
        return not self.children and self.rule is None

    def count(self) -> int:
        return 1 + sum(c.count() for c in self.children)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"assumption": self.assumption}
        if self.rule is not None:
            out["rule"] = self.rule
            if self.edge is not None:
                out["edge"] = list(self.edge)
            out["children"] = [c.to_json() for c in self.children]
        else:
            out["contradiction"] = self.contradiction
        return out

    @classmethod
    def from_json(cls, data: Any) -> "TraceNode":
        if not isinstance(data, dict):
            raise FormatError("trace node must be an object")
        node = cls(assumption=data.get("assumption"))
        if "rule" in data:
            node.rule = data["rule"]
            edge = data.get("edge")
            if edge is not None:
                if not (isinstance(edge, list) and len(edge) == 2 and all(isinstance(x, int) for x in edge)):
                    raise FormatError("edge must be a pair of vertices")
                node.edge = (edge[0], edge[1])
            kids = data.get("children")
            if not isinstance(kids, list):
                raise FormatError("branching node without a children list")
            node.children = [cls.from_json(k) for k in kids]
        else:
            c = data.get("contradiction")
            if not isinstance(c, dict) or "lemma" not in c:
                raise FormatError("leaf without a contradiction")
            node.contradiction = c
        return node


@dataclass
class RefutationTrace:
    vertex_count: int
    mode: Mode
    values: tuple[int, ...] | None  # inducing values, for display
    root: TraceNode

    def to_json(self) -> dict:
        return {
            "vertex_count": self.vertex_count,
            "mode": self.mode.value,
            "values": list(self.values) if self.values is not None else None,
            "nodes": self.root.count(),
            "root": self.root.to_json(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, data: Any) -> "RefutationTrace":
        if not isinstance(data, dict):
            raise FormatError("trace must be a JSON object")
        try:
            n = int(data["vertex_count"])
            mode = Mode.parse(data["mode"])
            values = data.get("values")
            root = TraceNode.from_json(data["root"])
        except KeyError as exc:
            raise FormatError(f"trace is missing {exc.args[0]!r}") from None
        except (TypeError, ValueError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"malformed trace: {exc}") from None
        return cls(n, mode, tuple(values) if values is not None else None, root)

    @classmethod
    def loads(cls, text: str) -> "RefutationTrace":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"trace is not valid JSON: {exc.msg}", exc.lineno) from None
        return cls.from_json(data)

    # text

    def name(self, v: int) -> str:
        if self.values is not None:
            return f"v{v}[{self.values[v]}]"
        return f"v{v}"

    def render(self) -> str:
        lines: list[str] = []
        self._render(self.root, 0, lines)
        return "\n".join(lines) + "\n"

    def _say(self, a: dict | None) -> str:
        if a is None:
            return ""
        if a.get("kind") == "one":
            return f"l({self.name(a['vertex'])}) = 1"
        u, v = a["edge"]
        w = a["guarantor"]
        if u == v:
            return f"l({self.name(w)}) = 2*l({self.name(u)})"
        return f"l({self.name(w)}) = l({self.name(u)}) + l({self.name(v)})"

    def _render(self, node: TraceNode, depth: int, lines: list[str]) -> None:
        pad = "  " * depth
        head = self._say(node.assumption)
        if node.rule == ONE_CLASS:
            lines.append(f"{pad}Some vertex is labeled 1; by symmetry inside classes, one case per class.")
        elif node.rule == GUARANTOR:
            u, v = node.edge
            what = f"the loop at {self.name(u)}" if u == v else f"the edge {self.name(u)}{self.name(v)}"
            lines.append(f"{pad}{'Case ' + head + ': ' if head else ''}{what} needs a vertex carrying its edge-number.")
        else:
            lines.append(f"{pad}Case {head}: {self._why(node.contradiction)}")
            return
        for child in node.children:
            self._render(child, depth + 1, lines)

    def _form(self, c: dict) -> str:
        try:
            f = form_from_json(c["form"], self.vertex_count)
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            return "?"
        return render_form(f, lambda j: f"l({self.name(j)})")

    def _why(self, c: dict | None) -> str:
        if not c:
            return "(no contradiction recorded)"
        lemma = c.get("lemma")
        if lemma == INCONSISTENT:
            return "the equations so far have no solution [Inconsistent]."
        if lemma == POSITIVITY:
            return f"l({self.name(c['vertex'])}) = {self._form(c)} is below 1 for all positive labels [Positivity]."
        if lemma == INTEGRALITY:
            return f"l({self.name(c['vertex'])}) = {self._form(c)} is not an integer [Integrality]."
        if lemma == NON_EQ:
            a, b = c["vertices"]
            return f"{self.name(a)} and {self.name(b)} get equal labels but are not equivalent [NonEq]."
        if lemma == SEQ_PROPER:
            u, v = c["pair"]
            w = c["guarantor"]
            pair = f"2*l({self.name(u)})" if u == v else f"l({self.name(u)}) + l({self.name(v)})"
            return f"{pair} equals l({self.name(w)}) although the pair is not adjacent [SeqProper]."
        return f"[{lemma}]"
