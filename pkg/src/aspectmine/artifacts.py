"""Stage artifact I/O: JSONL intermediates, score serialization, manifests.

Every writer is deterministic (stable ordering, sorted keys) so reruns over
identical inputs produce byte-identical files and digests.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .miner import AspectTerm, ItemSet, Rule, Transaction
from .sentiment import ScorePair, ScoreSet, normalize_per_entity
from .tagger import NounPhrase, PosTag


def sha256_file(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for block in iter(lambda: fh.read(65536), b""):
            digest.update(block)
    return digest.hexdigest()


def write_jsonl(path: str | Path, rows: Iterable[Mapping]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True) + "\n")


def read_jsonl(path: str | Path) -> list[dict]:
    rows: list[dict] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                rows.append(json.loads(line))
    return rows


def write_json(path: str | Path, payload) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


# --- noun phrases ---

def noun_phrases_to_jsonl(phrases: Sequence[NounPhrase], path: str | Path) -> None:
    write_jsonl(
        path,
        (
            {
                "entity": np.sentence_ref[0] if np.sentence_ref else None,
                "review_id": np.sentence_ref[1] if np.sentence_ref else None,
                "index": np.sentence_ref[2] if np.sentence_ref else None,
                "span": list(np.span),
                "terms": list(np.terms),
                "tags": [t.value for t in np.tags],
            }
            for np in phrases
        ),
    )


def noun_phrases_from_jsonl(path: str | Path) -> list[NounPhrase]:
    phrases = []
    for row in read_jsonl(path):
        ref = None
        if row.get("entity") is not None:
            ref = (row["entity"], row["review_id"], row["index"])
        phrases.append(
            NounPhrase(
                span=tuple(row["span"]),
                terms=tuple(row["terms"]),
                tags=tuple(PosTag(t) for t in row["tags"]),
                sentence_ref=ref,
            )
        )
    return phrases


# --- mining outputs ---

def transactions_to_jsonl(transactions: Sequence[Transaction], path: str | Path) -> None:
    write_jsonl(path, ({"items": sorted(t.items)} for t in transactions))


def transactions_from_jsonl(path: str | Path) -> list[Transaction]:
    return [Transaction(items=frozenset(row["items"])) for row in read_jsonl(path)]


def itemsets_to_jsonl(itemsets: Sequence[ItemSet], path: str | Path) -> None:
    write_jsonl(
        path,
        (
            {"items": list(it.items), "support_count": it.support_count, "support": it.support}
            for it in itemsets
        ),
    )


def itemsets_from_jsonl(path: str | Path) -> list[ItemSet]:
    return [
        ItemSet(items=tuple(row["items"]), support_count=row["support_count"], support=row["support"])
        for row in read_jsonl(path)
    ]


def rules_to_jsonl(rules: Sequence[Rule], path: str | Path) -> None:
    write_jsonl(
        path,
        (
            {
                "antecedent": list(r.antecedent),
                "consequent": list(r.consequent),
                "support": r.support,
                "confidence": r.confidence,
            }
            for r in rules
        ),
    )


def rules_from_jsonl(path: str | Path) -> list[Rule]:
    return [
        Rule(
            antecedent=tuple(row["antecedent"]),
            consequent=tuple(row["consequent"]),
            support=row["support"],
            confidence=row["confidence"],
        )
        for row in read_jsonl(path)
    ]


def aspect_terms_to_jsonl(terms: Sequence[AspectTerm], path: str | Path) -> None:
    write_jsonl(path, ({"words": list(t.words), "occurrence_count": t.occurrence_count} for t in terms))


def aspect_terms_from_jsonl(path: str | Path) -> list[AspectTerm]:
    return [
        AspectTerm(words=tuple(row["words"]), occurrence_count=row["occurrence_count"])
        for row in read_jsonl(path)
    ]


# --- scores ---

def _pair_payload(pair: ScorePair) -> dict:
    return {
        "positive": str(pair.positive),
        "negative": str(pair.negative),
        "positive_value": float(pair.positive),
        "negative_value": float(pair.negative),
    }


def _pair_from_payload(payload: Mapping) -> ScorePair:
    return ScorePair(positive=Fraction(payload["positive"]), negative=Fraction(payload["negative"]))


def scores_to_json(scores: ScoreSet, review_counts: Mapping[str, int], path: str | Path) -> None:
    normalized: dict[str, dict[str, dict | None]] = {}
    for entity, per_category in scores.entity_category.items():
        row: dict[str, dict | None] = {}
        for cid, pair in per_category.items():
            norm = normalize_per_entity(pair, review_counts.get(entity, 0))
            if norm is None:
                row[cid] = None
            else:
                row[cid] = {
                    "positive": str(norm[0]),
                    "negative": str(norm[1]),
                    "positive_value": float(norm[0]),
                    "negative_value": float(norm[1]),
                }
        normalized[entity] = row

    payload = {
        "term": {" ".join(words): _pair_payload(p) for words, p in scores.term.items()},
        "category": {cid: _pair_payload(p) for cid, p in scores.category.items()},
        "entity_term": {
            e: {" ".join(words): _pair_payload(p) for words, p in per.items()}
            for e, per in scores.entity_term.items()
        },
        "entity_category": {
            e: {cid: _pair_payload(p) for cid, p in per.items()}
            for e, per in scores.entity_category.items()
        },
        "normalized_entity_category": normalized,
        "review_counts": dict(sorted(review_counts.items())),
    }
    write_json(path, payload)


def scores_from_json(path: str | Path) -> tuple[ScoreSet, dict[str, int]]:
    with open(path, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    scores = ScoreSet(
        term={tuple(k.split(" ")): _pair_from_payload(v) for k, v in payload["term"].items()},
        category={k: _pair_from_payload(v) for k, v in payload["category"].items()},
        entity_term={
            e: {tuple(k.split(" ")): _pair_from_payload(v) for k, v in per.items()}
            for e, per in payload["entity_term"].items()
        },
        entity_category={
            e: {k: _pair_from_payload(v) for k, v in per.items()}
            for e, per in payload["entity_category"].items()
        },
    )
    return scores, dict(payload["review_counts"])


# --- manifest ---

def write_manifest(
    path: str | Path,
    config: Mapping,
    inputs: Mapping[str, str | Path],
    artifacts: Mapping[str, str | Path],
) -> dict:
    manifest = {
        "config": dict(sorted(config.items())),
        "inputs": {name: sha256_file(p) for name, p in sorted(inputs.items())},
        "artifacts": {name: sha256_file(p) for name, p in sorted(artifacts.items())},
    }
    write_json(path, manifest)
    return manifest
