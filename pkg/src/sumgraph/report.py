"""Machine-readable reports and their plain-text rendering.

A report is a JSON object. Everything except ``timing`` is a function of
the echoed command and the input files, so two runs of the same command
give the same bytes once ``timing`` is dropped.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any, Iterable, Mapping

from . import __version__
from .graph import SumGraph
from .labeling import Labeling, validate

TOOL = "sumgraph"


def digest(data: bytes) -> str:
    return "sha256:" + hashlib.sha256(data).hexdigest()


def revalidate(G: SumGraph, labelings: Iterable[Iterable[int]]) -> None:
    """Refuse to report a labeling that is not valid on ``G``."""
    for labels in labelings:
        bad = validate(Labeling(G, labels))
        if bad:
            raise AssertionError(f"refusing to report invalid labeling {list(labels)}: {bad[0]}")


def build(command: list[str], inputs: Mapping[str, bytes], bounds: Mapping[str, Any],
          result: Mapping[str, Any], elapsed: float) -> dict:
    return {
        "tool": TOOL,
        "version": __version__,
        "command": list(command),
        "inputs": {name: digest(data) for name, data in inputs.items()},
        "bounds": dict(bounds),
        "result": dict(result),
        "timing": {"elapsed_seconds": round(elapsed, 3)},
    }


def dumps(report: Mapping[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def payload(report: Mapping[str, Any]) -> str:
    """Canonical text of everything but the timing."""
    return json.dumps({k: v for k, v in report.items() if k != "timing"}, sort_keys=True)


# plain text

def _scalar(x: Any) -> str:
    if x is None:
        return "-"
    if isinstance(x, bool):
        return "yes" if x else "no"
    return str(x)


def _lines(key: str, value: Any, depth: int, out: list[str]) -> None:
    pad = "  " * depth
    if isinstance(value, dict):
        out.append(f"{pad}{key}:")
        for k in value:
            _lines(str(k), value[k], depth + 1, out)
    elif isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
        out.append(f"{pad}{key}:")
        for i, v in enumerate(value):
            _lines(f"[{i}]", v, depth + 1, out)
    elif isinstance(value, list):
        out.append(f"{pad}{key}: {' '.join(_scalar(v) for v in value) if value else '(none)'}")
    else:
        out.append(f"{pad}{key}: {_scalar(value)}")


def render_text(report: Mapping[str, Any]) -> str:
    """Readable form of a report; proof traces and covers get their own prose."""
    from .refuter import RefutationTrace

    out = [f"{report['tool']} {report['version']}: {' '.join(report['command'])}"]
    for name, d in report.get("inputs", {}).items():
        out.append(f"  input {name} {d}")
    _lines("bounds", report.get("bounds", {}), 0, out)
    result = dict(report.get("result", {}))
    trace = result.pop("trace", None)
    covers = result.pop("covers", None)
    graph_text = result.pop("graph", None)
    _lines("result", result, 0, out)
    if graph_text:
        out.append("graph file:")
        out.extend("  " + line for line in graph_text.splitlines())
    if covers:
        out.append("covers:")
        for c in covers:
            out.append(f"  generator {c['generator']} (label {c['generator_label']}, "
                       f"{c['terminal_count']} terminals)")
            for s in c["sequences"]:
                tag = "[improper]" if s["improper"] else "[terminal]"
                out.append(f"    {s['start']} +{s['difference']}×{s['length'] - 1} → {s['last']} {tag}")
    if trace:
        out.append("proof:")
        out.extend("  " + line for line in RefutationTrace.from_json(trace).render().splitlines())
    out.append(f"elapsed: {report.get('timing', {}).get('elapsed_seconds', 0)} s")
    return "\n".join(out) + "\n"
