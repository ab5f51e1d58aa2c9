"""Exact linear constraints over vertex labels.

A system holds equations ``sum(a_v * l(v)) = c`` in reduced row echelon
form over :class:`fractions.Fraction`. Pivots are always the leftmost
remaining column, so two systems with the same row space have identical
rows no matter the order equations were added in.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Form = tuple  # (Fraction per variable..., constant): value = sum(coef * l) + constant


class Inconsistent(Exception):
    """The equations have no solution at all (not even a rational one)."""


class LinearSystem:
    def __init__(self, nvars: int):
        self.nvars = nvars
        # pivot column -> row; row[j] are coefficients, row[nvars] the right side
        self.rows: dict[int, list[Fraction]] = {}

    def copy(self) -> "LinearSystem":
        out = LinearSystem(self.nvars)
        out.rows = {p: list(r) for p, r in self.rows.items()}
        return out

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _reduce(self, row: list[Fraction]) -> list[Fraction]:
        for p, prow in self.rows.items():
            a = row[p]
            if a:
                for j in range(self.nvars + 1):
                    if prow[j]:
                        row[j] -= a * prow[j]
        return row

    def add(self, coeffs: dict[int, int | Fraction], rhs: int | Fraction = 0) -> bool:
        """Add ``sum(coeffs[v] * l(v)) = rhs``; returns False if it was already implied."""
        row = [Fraction(0)] * (self.nvars + 1)
        for v, a in coeffs.items():
            row[v] += a
        row[self.nvars] = Fraction(rhs)
        row = self._reduce(row)
        pivot = next((j for j in range(self.nvars) if row[j]), None)
        if pivot is None:
            if row[self.nvars]:
                raise Inconsistent()
            return False
        inv = 1 / row[pivot]
        row = [x * inv for x in row]
        for prow in self.rows.values():
            a = prow[pivot]
            if a:
                for j in range(self.nvars + 1):
                    if row[j]:
                        prow[j] -= a * row[j]
        self.rows[pivot] = row
        return True

    def free(self) -> list[int]:
        return [j for j in range(self.nvars) if j not in self.rows]

    def form(self, v: int) -> Form:
        """``l(v)`` written over the free variables."""
        out = [Fraction(0)] * (self.nvars + 1)
        row = self.rows.get(v)
        if row is None:
            out[v] = Fraction(1)
            return tuple(out)
        for j in range(self.nvars):
            if j != v and row[j]:
                out[j] = -row[j]
        out[self.nvars] = row[self.nvars]
        return tuple(out)


def add_forms(*forms: Form, signs: Sequence[int] | None = None) -> Form:
    signs = signs or [1] * len(forms)
    return tuple(sum((s * f[j] for f, s in zip(forms, signs)), Fraction(0)) for j in range(len(forms[0])))


def is_constant(f: Form) -> bool:
    return not any(f[:-1])


def max_value(f: Form) -> Fraction | None:
    """Largest value of ``f`` when every free label is a positive integer, or None if unbounded."""
    if any(a > 0 for a in f[:-1]):
        return None
    return f[-1] + sum(f[:-1])


def form_to_json(f: Form) -> dict:
    return {"terms": {str(j): str(a) for j, a in enumerate(f[:-1]) if a}, "const": str(f[-1])}


def form_from_json(data: dict, nvars: int) -> Form:
    out = [Fraction(0)] * (nvars + 1)
    for j, a in data["terms"].items():
        out[int(j)] = Fraction(a)
    out[nvars] = Fraction(data["const"])
    return tuple(out)


def render_form(f: Form, name) -> str:
    parts: list[str] = []
    for j, a in enumerate(f[:-1]):
        if not a:
            continue
        coef = "" if abs(a) == 1 else f"{abs(a)}*"
        parts.append(("- " if a < 0 else "+ ") + coef + name(j))
    if f[-1] or not parts:
        c = f[-1]
        parts.append(("- " if c < 0 else "+ ") + str(abs(c)))
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
