"""Summary rendering: the bucketized overall score table and the per-entity
comparison matrix, as CSV, Markdown, or self-contained HTML."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .kano import BUCKET_LABELS, BUCKET_ORDER, BucketAssignment, KanoBucket
from .miner import AspectCategory
from .sentiment import ScorePair, ScoreSet, normalize_per_entity

Number = float | int | Fraction

DISPLAY_SCALE = 10_000  # entity-table values are shown at 1e-4 scale


@dataclass(frozen=True)
class SentimentBar:
    """Positive share of the total sentiment magnitude; None when there is
    no sentiment at all (rendered as an empty cell)."""

    fraction: float | None

    @property
    def empty(self) -> bool:
        return self.fraction is None


def bar(positive: Number, negative: Number) -> SentimentBar:
    if positive < 0 or negative < 0:
        raise ValueError(f"scores must be non-negative, got ({positive}, {negative})")
    total = positive + negative
    if total == 0:
        return SentimentBar(fraction=None)
    return SentimentBar(fraction=float(positive) / float(total))


@dataclass(frozen=True)
class SummaryRow:
    bucket: KanoBucket | None  # None = unassigned
    label: str
    positive: float
    negative: float
    bar: SentimentBar
    category_id: str = ""


@dataclass
class OverallTable:
    rows: list[SummaryRow]
    warnings: list[str]


def overall_table(
    assignments: Sequence[BucketAssignment],
    category_scores: Mapping[str, ScorePair],
    categories: Sequence[AspectCategory],
) -> OverallTable:
    """Rows grouped by bucket priority, descending positive score within each
    bucket. Scored categories with no assignment trail in an Unassigned
    section and produce a warning."""
    labels = {c.category_id: c.label for c in categories}
    assigned = {a.category_id: a.bucket for a in assignments if a.bucket is not None}
    warnings: list[str] = []

    rows: list[SummaryRow] = []
    for cid, pair in category_scores.items():
        pos, neg = pair.as_floats()
        bucket = assigned.get(cid)
        if bucket is None:
            warnings.append(f"category {cid!r} has no bucket assignment")
        rows.append(
            SummaryRow(
                bucket=bucket,
                label=labels.get(cid, cid),
                positive=round(pos, 3),
                negative=round(neg, 3),
                bar=bar(pos, neg),
                category_id=cid,
            )
        )

    bucket_rank = {b: i for i, b in enumerate(BUCKET_ORDER)}
    rows.sort(key=lambda r: (bucket_rank.get(r.bucket, len(BUCKET_ORDER)), -r.positive, r.label))
    return OverallTable(rows=rows, warnings=warnings)


@dataclass(frozen=True)
class EntityCell:
    positive: float | None
    negative: float | None

    @property
    def empty(self) -> bool:
        return self.positive is None


@dataclass
class EntityTable:
    entities: list[str]
    labels: list[str]
    cells: list[list[EntityCell]]  # cells[row][entity_column]


def entity_table(
    scores: ScoreSet,
    categories: Sequence[AspectCategory],
    review_counts: Mapping[str, int],
    entities: Sequence[str] | None = None,
    row_order: Sequence[str] | None = None,
) -> EntityTable:
    """Per-entity normalized category scores at 1e-4 display scale. An entity
    with zero reviews renders as empty cells."""
    entity_list = list(entities) if entities is not None else sorted(review_counts)
    ordered_ids = list(row_order) if row_order is not None else [c.category_id for c in categories]
    labels_by_id = {c.category_id: c.label for c in categories}

    labels: list[str] = []
    cells: list[list[EntityCell]] = []
    for cid in ordered_ids:
        labels.append(labels_by_id.get(cid, cid))
        row: list[EntityCell] = []
        for entity in entity_list:
            pair = scores.entity_category.get(entity, {}).get(cid, ScorePair())
            normalized = normalize_per_entity(pair, review_counts.get(entity, 0))
            if normalized is None:
                row.append(EntityCell(positive=None, negative=None))
            else:
                pos, neg = normalized
                row.append(
                    EntityCell(
                        positive=round(float(pos) * DISPLAY_SCALE, 3),
                        negative=round(float(neg) * DISPLAY_SCALE, 3),
                    )
                )
        cells.append(row)
    return EntityTable(entities=entity_list, labels=labels, cells=cells)


def _bucket_label(bucket: KanoBucket | None) -> str:
    return BUCKET_LABELS[bucket] if bucket is not None else "Unassigned"


def _fmt(value: float | None, digits: int = 3) -> str:
    return "" if value is None else f"{value:.{digits}f}"


def render_overall_csv(table: OverallTable) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["bucket", "category", "positive", "negative", "bar"])
    for row in table.rows:
        writer.writerow(
            [
                _bucket_label(row.bucket),
                row.label,
                _fmt(row.positive),
                _fmt(row.negative),
                _fmt(row.bar.fraction, 2),
            ]
        )
    return out.getvalue()


def parse_overall_csv(text: str) -> list[SummaryRow]:
    """Inverse of render_overall_csv (numeric cells at display precision)."""
    rows: list[SummaryRow] = []
    label_to_bucket = {v: k for k, v in BUCKET_LABELS.items()}
    for rec in csv.DictReader(io.StringIO(text)):
        fraction = float(rec["bar"]) if rec["bar"] else None
        rows.append(
            SummaryRow(
                bucket=label_to_bucket.get(rec["bucket"]),
                label=rec["category"],
                positive=float(rec["positive"]),
                negative=float(rec["negative"]),
                bar=SentimentBar(fraction=fraction),
            )
        )
    return rows


def render_entity_csv(table: EntityTable) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    header = ["category"]
    for entity in table.entities:
        header += [f"{entity}_positive", f"{entity}_negative"]
    writer.writerow(header)
    for label, row in zip(table.labels, table.cells):
        rec = [label]
        for cell in row:
            rec += [_fmt(cell.positive), _fmt(cell.negative)]
        writer.writerow(rec)
    return out.getvalue()


def render_overall_md(table: OverallTable) -> str:
    lines = ["| Bucket | Category | Positive | Negative | Bar |", "| --- | --- | --- | --- | --- |"]
    for row in table.rows:
        lines.append(
            f"| {_bucket_label(row.bucket)} | {row.label} | {_fmt(row.positive)} "
            f"| {_fmt(row.negative)} | {_fmt(row.bar.fraction, 2)} |"
        )
    return "\n".join(lines) + "\n"


def render_entity_md(table: EntityTable) -> str:
    header = "| Category |" + "".join(f" {e} + | {e} - |" for e in table.entities)
    sep = "| --- |" + " --- | --- |" * len(table.entities)
    lines = [header, sep]
    for label, row in zip(table.labels, table.cells):
        cells = "".join(f" {_fmt(c.positive)} | {_fmt(c.negative)} |" for c in row)
        lines.append(f"| {label} |" + cells)
    return "\n".join(lines) + "\n"


_HTML_STYLE = (
    "body{font-family:sans-serif;margin:2em}"
    "table{border-collapse:collapse;margin-bottom:2em}"
    "th,td{border:1px solid #999;padding:4px 8px;font-size:14px}"
    "th{background:#eee}"
    ".bar{display:flex;width:160px;height:14px;background:#f5f5f5}"
    ".bar .pos{background:#2e7d32;height:100%}"
    ".bar .neg{background:#c62828;height:100%}"
)


def _bar_html(b: SentimentBar) -> str:
    if b.empty:
        return "<td></td>"
    pct = round(b.fraction * 100)
    return (
        f'<td><div class="bar"><div class="pos" style="width:{pct}%"></div>'
        f'<div class="neg" style="width:{100 - pct}%"></div></div> {b.fraction:.2f}</td>'
    )


def render_html(overall: OverallTable, entity: EntityTable | None = None, title: str = "Aspect report") -> str:
    parts = [
        "<!DOCTYPE html>",
        f"<html><head><meta charset='utf-8'><title>{title}</title>",
        f"<style>{_HTML_STYLE}</style></head><body>",
        f"<h1>{title}</h1>",
        "<h2>Overall scores by bucket</h2>",
        "<table><tr><th>Bucket</th><th>Category</th><th>Positive</th><th>Negative</th><th>Bar</th></tr>",
    ]
    for row in overall.rows:
        parts.append(
            f"<tr><td>{_bucket_label(row.bucket)}</td><td>{row.label}</td>"
            f"<td>{_fmt(row.positive)}</td><td>{_fmt(row.negative)}</td>{_bar_html(row.bar)}</tr>"
        )
    parts.append("</table>")
    if entity is not None and entity.entities:
        parts.append("<h2>Per-entity scores (&times;10<sup>-4</sup>, per review)</h2>")
        head = "".join(f"<th>{e} +</th><th>{e} -</th>" for e in entity.entities)
        parts.append(f"<table><tr><th>Category</th>{head}</tr>")
        for label, row in zip(entity.labels, entity.cells):
            cells = "".join(f"<td>{_fmt(c.positive)}</td><td>{_fmt(c.negative)}</td>" for c in row)
            parts.append(f"<tr><td>{label}</td>{cells}</tr>")
        parts.append("</table>")
    parts.append("</body></html>")
    return "\n".join(parts) + "\n"


def render(
    overall: OverallTable,
    entity: EntityTable | None,
    fmt: str,
    out_dir: str | Path,
) -> list[Path]:
    """Write the report files for one format; returns the written paths."""
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        written: list[Path] = []
        if fmt == "csv":
            written.append(_write(out / "overall.csv", render_overall_csv(overall)))
            if entity is not None:
                written.append(_write(out / "entities.csv", render_entity_csv(entity)))
        elif fmt == "md":
            written.append(_write(out / "overall.md", render_overall_md(overall)))
            if entity is not None:
                written.append(_write(out / "entities.md", render_entity_md(entity)))
        elif fmt == "html":
            written.append(_write(out / "index.html", render_html(overall, entity)))
        else:
            raise ValueError(f"unknown report format {fmt!r}")
        return written
    except OSError as exc:
        raise RuntimeError(f"cannot write report under {out}: {exc}") from exc


def _write(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8")
    return path
