"""Accuracy, precision and recall against gold labels; report tables and charts."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from xml.sax.saxutils import escape

from .polarity import CLASS_ORDER, DocPolarity

MEASURES = ("Accuracy", "Precision", "Recall")


class EvaluationError(ValueError):
    pass


@dataclass
class ConfusionMatrix:
    """Rows are gold classes, columns predicted, both in ``CLASS_ORDER``."""

    cells: list[list[int]] = field(default_factory=lambda: [[0] * 3 for _ in range(3)])

    @property
    def total(self) -> int:
        return sum(map(sum, self.cells))

    def cell(self, gold: DocPolarity, predicted: DocPolarity) -> int:
        return self.cells[CLASS_ORDER.index(gold)][CLASS_ORDER.index(predicted)]

    def row_sum(self, c: DocPolarity) -> int:
        return sum(self.cells[CLASS_ORDER.index(c)])

    def column_sum(self, c: DocPolarity) -> int:
        j = CLASS_ORDER.index(c)
        return sum(row[j] for row in self.cells)

    def trace(self) -> int:
        return sum(self.cells[i][i] for i in range(3))


def confusion(verdicts, gold: dict[str, DocPolarity]) -> ConfusionMatrix:
    """Count (gold, predicted) pairs; every verdict id needs a gold label."""
    seen = set()
    missing = []
    m = ConfusionMatrix()
    for v in verdicts:
        if v.doc_id in seen:
            raise EvaluationError(f"duplicate verdict id: {v.doc_id}")
        seen.add(v.doc_id)
        g = gold.get(v.doc_id)
        if g is None:
            missing.append(v.doc_id)
            continue
        m.cells[CLASS_ORDER.index(g)][CLASS_ORDER.index(v.polarity)] += 1
    if missing:
        raise EvaluationError("no gold label for: " + ", ".join(missing))
    return m


@dataclass
class EvalReport:
    matrix: ConfusionMatrix
    precision: dict[DocPolarity, float | None]
    recall: dict[DocPolarity, float | None]
    accuracy: float | None
    macro_precision: float | None
    macro_recall: float | None

    def triple(self) -> tuple[float | None, float | None, float | None]:
        return self.accuracy, self.macro_precision, self.macro_recall

    def to_dict(self) -> dict:
        return {
            "accuracy": self.accuracy,
            "macro_precision": self.macro_precision,
            "macro_recall": self.macro_recall,
            "precision": {c.value: self.precision[c] for c in CLASS_ORDER},
            "recall": {c.value: self.recall[c] for c in CLASS_ORDER},
            "matrix": {"labels": [c.value for c in CLASS_ORDER],
                       "cells": self.matrix.cells, "total": self.matrix.total},
        }


def _ratio(num: int, den: int) -> float | None:
    return num / den if den else None


def _mean(values) -> float | None:
    defined = [v for v in values if v is not None]
    return sum(defined) / len(defined) if defined else None


def metrics(m: ConfusionMatrix) -> EvalReport:
    """Per-class and macro precision/recall plus accuracy.

    A zero denominator leaves the value undefined (``None``); macro means
    skip undefined classes.
    """
    precision = {c: _ratio(m.cell(c, c), m.column_sum(c)) for c in CLASS_ORDER}
    recall = {c: _ratio(m.cell(c, c), m.row_sum(c)) for c in CLASS_ORDER}
    return EvalReport(m, precision, recall, _ratio(m.trace(), m.total),
                      _mean(precision.values()), _mean(recall.values()))


# --------------------------------------------------------------------------
# rendering

def fmt(value: float | None) -> str:
    """Two decimals with one trailing zero dropped: 0.63, 0.7, 1.0."""
    if value is None:
        return "n/a"
    s = f"{value:.2f}"
    return s[:-1] if s.endswith("0") else s


def _table(rows: list[list[str]]) -> str:
    return "".join("\t".join(r) + "\n" for r in rows)


def render_report(report: EvalReport, format: str = "text") -> str:
    if format == "text":
        rows = [["Measures", "Results"]]
        rows += [[name, fmt(v)] for name, v in zip(MEASURES, report.triple())]
        return _table(rows)
    if format == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=True) + "\n"
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["measure", "class", "value"])
        w.writerow(["accuracy", "all", _csv_value(report.accuracy)])
        for name, per_class, macro in (("precision", report.precision, report.macro_precision),
                                       ("recall", report.recall, report.macro_recall)):
            for c in CLASS_ORDER:
                w.writerow([name, c.value, _csv_value(per_class[c])])
            w.writerow([name, "macro", _csv_value(macro)])
        w.writerow(["documents", "all", report.matrix.total])
        return buf.getvalue()
    raise EvaluationError(f"unknown report format {format!r}")


def _csv_value(v: float | None) -> str:
    return "n/a" if v is None else repr(v)


@dataclass(frozen=True)
class System:
    """One column of a comparison: a computed report or a published triple."""

    name: str
    values: tuple[float | None, float | None, float | None]
    source: str | None = None  # set for published figures

    @classmethod
    def from_report(cls, name: str, report: EvalReport) -> System:
        return cls(name, report.triple())

    @classmethod
    def parse(cls, text: str, source: str = "published") -> System:
        """``NAME=accuracy,precision,recall``"""
        name, eq, nums = text.partition("=")
        parts = nums.split(",")
        if not eq or not name.strip() or len(parts) != 3:
            raise EvaluationError(f"expected NAME=accuracy,precision,recall, got {text!r}")
        try:
            values = tuple(float(p) for p in parts)
        except ValueError:
            raise EvaluationError(f"non-numeric value in {text!r}") from None
        for v in values:
            if not 0.0 <= v <= 1.0:
                raise EvaluationError(f"values must lie in [0, 1]: {text!r}")
        return cls(name.strip(), values, source)


def compare(systems: list[System], format: str = "text") -> str:
    """Measures as rows, one column per system, in the order given.

    Text output is tab-separated; published columns are listed with their
    source in notes below the table.
    """
    if len(systems) < 2:
        raise EvaluationError("a comparison needs at least two systems")
    if format == "text":
        rows = [["Measures\\System"] + [s.name for s in systems]]
        for i, measure in enumerate(MEASURES):
            rows.append([measure] + [fmt(s.values[i]) for s in systems])
        out = _table(rows)
        notes = [f"{s.name}: {s.source}" for s in systems if s.source]
        if notes:
            out += "\n" + "".join(n + "\n" for n in notes)
        return out
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["measure"] + [s.name for s in systems])
        for i, measure in enumerate(MEASURES):
            w.writerow([measure.lower()] + [_csv_value(s.values[i]) for s in systems])
        w.writerow(["source"] + [s.source or "" for s in systems])
        return buf.getvalue()
    if format == "json":
        obj = [{"name": s.name, "source": s.source,
                **{m.lower(): s.values[i] for i, m in enumerate(MEASURES)}} for s in systems]
        return json.dumps(obj, indent=2, sort_keys=True) + "\n"
    raise EvaluationError(f"unknown report format {format!r}")


PALETTE = ("#4e79a7", "#e15759", "#59a14f", "#f28e2b", "#76b7b2", "#b07aa1")


def render_chart(systems, out_path=None, title: str = "") -> str:
    """Grouped bar chart as SVG: one group per measure, one bar per system.

    ``systems`` is a list of :class:`System` (a single :class:`EvalReport`
    is also accepted).  Returns the SVG text and writes it to ``out_path``
    when given.
    """
    if isinstance(systems, EvalReport):
        systems = [System.from_report("system", systems)]
    systems = list(systems)
    if not systems or all(v is None for s in systems for v in s.values):
        raise EvaluationError("nothing defined to plot")

    left, top, plot_w, plot_h = 60, 40 if title else 20, 420, 250
    group_w = plot_w / len(MEASURES)
    bar_w = min(40.0, group_w * 0.7 / len(systems))
    legend_h = 20 * len(systems)
    width, height = left + plot_w + 20, top + plot_h + 40 + legend_h
    bottom = top + plot_h

    def n(x: float) -> str:
        return f"{x:.2f}".rstrip("0").rstrip(".")

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    if title:
        parts.append(f'<text x="{n(width / 2)}" y="24" text-anchor="middle" '
                     f'font-size="14">{escape(title)}</text>')
    for k in range(11):
        y = bottom - plot_h * k / 10
        parts.append(f'<line class="grid" x1="{left}" y1="{n(y)}" x2="{left + plot_w}" '
                     f'y2="{n(y)}" stroke="#dddddd" stroke-width="1"/>')
        parts.append(f'<text x="{left - 6}" y="{n(y + 4)}" text-anchor="end">{k / 10:.1f}</text>')
    parts.append(f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="#000000"/>')
    parts.append(f'<line x1="{left}" y1="{bottom}" x2="{left + plot_w}" y2="{bottom}" stroke="#000000"/>')

    for g, measure in enumerate(MEASURES):
        gx = left + g * group_w
        start = gx + (group_w - bar_w * len(systems)) / 2
        for s_i, system in enumerate(systems):
            value = system.values[g]
            if value is None:
                continue
            h = plot_h * value
            x = start + s_i * bar_w
            parts.append(
                f'<rect class="bar" data-system="{escape(system.name)}" data-measure="{measure}" '
                f'data-value="{value!r}" x="{n(x)}" y="{n(bottom - h)}" width="{n(bar_w)}" '
                f'height="{n(h)}" fill="{PALETTE[s_i % len(PALETTE)]}"/>')
            parts.append(f'<text x="{n(x + bar_w / 2)}" y="{n(bottom - h - 4)}" '
                         f'text-anchor="middle" font-size="10">{fmt(value)}</text>')
        parts.append(f'<text x="{n(gx + group_w / 2)}" y="{bottom + 18}" '
                     f'text-anchor="middle">{measure}</text>')

    for s_i, system in enumerate(systems):
        y = bottom + 34 + 20 * s_i
        parts.append(f'<rect class="legend" x="{left}" y="{y - 10}" width="12" height="12" '
                     f'fill="{PALETTE[s_i % len(PALETTE)]}"/>')
        label = system.name + (f" ({system.source})" if system.source else "")
        parts.append(f'<text x="{left + 18}" y="{y}">{escape(label)}</text>')
    parts.append("</svg>")
    svg = "\n".join(parts) + "\n"
    if out_path is not None:
        try:
            Path(out_path).write_text(svg, encoding="utf-8")
        except OSError as exc:
            raise EvaluationError(f"cannot write chart {out_path}: {exc}") from None
    return svg
