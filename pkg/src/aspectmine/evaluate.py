"""Recall/precision evaluation of extracted aspects against a manually
gathered gold feature list, with explicit override pairs for judged matches."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

Words = tuple[str, ...]


class OverrideError(ValueError):
    """Raised when an override names a gold feature that does not exist."""


@dataclass(frozen=True)
class GoldFeature:
    name: str
    aliases: tuple[str, ...]
    offered_by: frozenset[str]


@dataclass
class MatchResult:
    pairs: list[tuple[str, Words]]  # (gold name, extracted term)
    unmatched_gold: list[str]
    unmatched_extracted: list[Words]

    @property
    def matched_gold(self) -> set[str]:
        return {name for name, _ in self.pairs}


def _words(text: str) -> Words:
    return tuple(text.lower().split())


def load_gold(path: str | Path) -> list[GoldFeature]:
    """gold.csv columns: name, aliases (|-separated), entities (|-separated)."""
    features: list[GoldFeature] = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            name = (row.get("name") or "").strip()
            if not name:
                continue
            aliases = tuple(a.strip() for a in (row.get("aliases") or "").split("|") if a.strip())
            entities = frozenset(e.strip() for e in (row.get("entities") or "").split("|") if e.strip())
            features.append(GoldFeature(name=name, aliases=aliases, offered_by=entities))
    return features


def load_overrides(path: str | Path) -> list[tuple[str, str]]:
    """overrides.csv columns: gold_name, extracted_term."""
    pairs: list[tuple[str, str]] = []
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            gold_name = (row.get("gold_name") or "").strip()
            term = (row.get("extracted_term") or "").strip()
            if gold_name and term:
                pairs.append((gold_name, term))
    return pairs


def _alias_matches(alias: Words, term: Words) -> bool:
    return alias == term or set(alias) <= set(term)


def match(
    gold: Sequence[GoldFeature],
    extracted: Sequence[Words],
    overrides: Sequence[tuple[str, str]] = (),
) -> MatchResult:
    """Greedy one-to-one matching in gold-file order.

    Overrides claim their terms first; remaining gold features match the
    first free extracted term one of their aliases (or their name) equals or
    is a word-subset of.
    """
    gold_names = {g.name for g in gold}
    override_map: dict[str, Words] = {}
    for gold_name, term in overrides:
        if gold_name not in gold_names:
            raise OverrideError(f"override references unknown gold feature {gold_name!r}")
        override_map.setdefault(gold_name, _words(term))

    free = list(extracted)
    pairs: list[tuple[str, Words]] = []
    matched: set[str] = set()

    for feature in gold:
        term = override_map.get(feature.name)
        if term is not None and term in free:
            pairs.append((feature.name, term))
            matched.add(feature.name)
            free.remove(term)

    for feature in gold:
        # an override pins its feature even when the named term was not extracted
        if feature.name in matched or feature.name in override_map:
            continue
        aliases = [_words(feature.name), *(_words(a) for a in feature.aliases)]
        hit = next((t for t in free if any(_alias_matches(a, t) for a in aliases)), None)
        if hit is not None:
            pairs.append((feature.name, hit))
            matched.add(feature.name)
            free.remove(hit)

    gold_rank = {g.name: i for i, g in enumerate(gold)}
    pairs.sort(key=lambda p: gold_rank[p[0]])
    return MatchResult(
        pairs=pairs,
        unmatched_gold=[g.name for g in gold if g.name not in matched],
        unmatched_extracted=free,
    )


def recall(result: MatchResult, gold: Sequence[GoldFeature], entity: str | None = None) -> float | None:
    """Matched share of the gold features in scope: those offered by `entity`,
    or all of them when entity is None. None when the scope is empty."""
    scope = [g for g in gold if entity is None or entity in g.offered_by]
    if not scope:
        return None
    matched = result.matched_gold
    return sum(1 for g in scope if g.name in matched) / len(scope)


def precision(true_positives: int, false_positives: int) -> float | None:
    """TP / (TP + FP); None when both counts are zero."""
    if true_positives < 0 or false_positives < 0:
        raise ValueError("counts must be non-negative")
    total = true_positives + false_positives
    if total == 0:
        return None
    return true_positives / total


def evaluation_matrix(
    gold: Sequence[GoldFeature],
    result: MatchResult,
    entities: Sequence[str],
) -> str:
    """Plain-text matrix: one row per gold feature with offered marks and the
    matched extracted term, recall per entity and overall, and precision over
    the extracted terms."""
    matched_term = dict(result.pairs)
    name_w = max([len("Feature")] + [len(g.name) for g in gold])
    cols = [f"{'Feature':<{name_w}}"] + [f"{e:>10}" for e in entities] + ["  extracted"]
    lines = ["  ".join(cols)]
    for g in gold:
        marks = [f"{'Y' if e in g.offered_by else '':>10}" for e in entities]
        term = " ".join(matched_term.get(g.name, ()))
        lines.append("  ".join([f"{g.name:<{name_w}}"] + marks + [f"  {term}"]))

    def pct(value: float | None) -> str:
        return "" if value is None else f"{value * 100:.2f}%"

    recall_cells = [f"{pct(recall(result, gold, e)):>10}" for e in entities]
    overall = pct(recall(result, gold))
    lines.append("  ".join([f"{'Recall':<{name_w}}"] + recall_cells + [f"  {overall} overall"]))

    tp = len(result.pairs)
    fp = len(result.unmatched_extracted)
    p = precision(tp, fp)
    lines.append(f"Precision: {pct(p)} ({tp} matched of {tp + fp} extracted)")
    return "\n".join(lines) + "\n"
