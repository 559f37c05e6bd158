"""Kano buckets, survey vote ingestion, and majority-vote bucketization."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence


class KanoBucket(Enum):
    MUST_HAVE = "must_have"
    ONE_DIMENSIONAL = "one_dimensional"
    DELIGHTER = "delighter"
    INDIFFERENT = "indifferent"
    REVERSE = "reverse"


# Tie-break priority: earlier wins a tied majority (deterministic, flagged).
BUCKET_ORDER: tuple[KanoBucket, ...] = (
    KanoBucket.MUST_HAVE,
    KanoBucket.ONE_DIMENSIONAL,
    KanoBucket.DELIGHTER,
    KanoBucket.INDIFFERENT,
    KanoBucket.REVERSE,
)

BUCKET_LABELS: dict[KanoBucket, str] = {
    KanoBucket.MUST_HAVE: "Must Haves",
    KanoBucket.ONE_DIMENSIONAL: "One Dimensional",
    KanoBucket.DELIGHTER: "Delighters",
    KanoBucket.INDIFFERENT: "Indifferent",
    KanoBucket.REVERSE: "Reverse",
}


def parse_bucket(raw: str) -> KanoBucket:
    """Case-insensitive bucket name; spaces and hyphens count as underscores."""
    key = raw.strip().lower().replace("-", "_").replace(" ", "_")
    try:
        return KanoBucket(key)
    except ValueError:
        raise ValueError(f"unknown bucket {raw!r}") from None


@dataclass(frozen=True)
class SurveyVote:
    subject_id: str
    category_id: str
    bucket: KanoBucket


@dataclass(frozen=True)
class VoteReject:
    line: int
    reason: str


@dataclass(frozen=True)
class BucketAssignment:
    category_id: str
    bucket: KanoBucket | None  # None = unassigned (no votes)
    tally: dict[KanoBucket, int]
    total_votes: int
    tied: bool


def load_votes(
    path: str | Path,
    known_category_ids: Iterable[str] | None = None,
) -> tuple[list[SurveyVote], list[VoteReject]]:
    """Read votes.csv (`subject_id,category_id,bucket`). Unknown buckets or
    categories and duplicate (subject, category) pairs are rejected per line."""
    known = set(known_category_ids) if known_category_ids is not None else None
    votes: list[SurveyVote] = []
    rejects: list[VoteReject] = []
    seen: set[tuple[str, str]] = set()
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        required = {"subject_id", "category_id", "bucket"}
        if reader.fieldnames is None or not required <= set(reader.fieldnames):
            raise ValueError(f"votes file {path} must have header subject_id,category_id,bucket")
        for lineno, row in enumerate(reader, 2):
            subject = (row.get("subject_id") or "").strip()
            category = (row.get("category_id") or "").strip()
            if not subject or not category:
                rejects.append(VoteReject(line=lineno, reason="missing subject or category"))
                continue
            try:
                bucket = parse_bucket(row.get("bucket") or "")
            except ValueError:
                rejects.append(VoteReject(line=lineno, reason=f"unknown bucket {row.get('bucket')!r}"))
                continue
            if known is not None and category not in known:
                rejects.append(VoteReject(line=lineno, reason=f"unknown category {category!r}"))
                continue
            if (subject, category) in seen:
                rejects.append(VoteReject(line=lineno, reason="duplicate vote"))
                continue
            seen.add((subject, category))
            votes.append(SurveyVote(subject_id=subject, category_id=category, bucket=bucket))
    return votes, rejects


def majority(category_id: str, votes: Sequence[SurveyVote]) -> BucketAssignment:
    """Majority bucket for one category's votes; ties resolve by bucket
    priority and are flagged for manual review. Zero votes -> unassigned."""
    tally = {b: 0 for b in BUCKET_ORDER}
    total = 0
    for vote in votes:
        if vote.category_id != category_id:
            continue
        tally[vote.bucket] += 1
        total += 1
    if total == 0:
        return BucketAssignment(category_id=category_id, bucket=None, tally=tally, total_votes=0, tied=False)
    best = max(tally.values())
    winners = [b for b in BUCKET_ORDER if tally[b] == best]
    return BucketAssignment(
        category_id=category_id,
        bucket=winners[0],
        tally=tally,
        total_votes=total,
        tied=len(winners) > 1,
    )


def assign_all(votes: Sequence[SurveyVote], category_ids: Sequence[str]) -> list[BucketAssignment]:
    return [majority(cid, votes) for cid in category_ids]


def load_assignments(path: str | Path) -> list[BucketAssignment]:
    """Read assignments.json: an array of {"category_id", "bucket"}; used to
    seed a report without running a survey. Tallies are synthesized as a
    single deciding vote."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise ValueError("assignments file must be a JSON array")
    assignments: list[BucketAssignment] = []
    seen: set[str] = set()
    for entry in raw:
        category_id = entry["category_id"]
        if category_id in seen:
            raise ValueError(f"duplicate assignment for category {category_id!r}")
        seen.add(category_id)
        bucket = parse_bucket(entry["bucket"])
        tally = {b: (1 if b is bucket else 0) for b in BUCKET_ORDER}
        assignments.append(
            BucketAssignment(category_id=category_id, bucket=bucket, tally=tally, total_votes=1, tied=False)
        )
    return assignments


def assignments_to_json(assignments: Sequence[BucketAssignment], path: str | Path) -> None:
    payload = [
        {
            "category_id": a.category_id,
            "bucket": a.bucket.value if a.bucket else None,
            "tally": {b.value: n for b, n in a.tally.items()},
            "total_votes": a.total_votes,
            "tied": a.tied,
        }
        for a in assignments
    ]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def assignments_from_json(path: str | Path) -> list[BucketAssignment]:
    """Read back the richer format written by assignments_to_json, falling
    back to the bare {"category_id", "bucket"} schema."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    assignments: list[BucketAssignment] = []
    for entry in raw:
        if "tally" not in entry:
            return load_assignments(path)
        tally = {KanoBucket(k): v for k, v in entry["tally"].items()}
        for b in BUCKET_ORDER:
            tally.setdefault(b, 0)
        bucket = KanoBucket(entry["bucket"]) if entry.get("bucket") else None
        assignments.append(
            BucketAssignment(
                category_id=entry["category_id"],
                bucket=bucket,
                tally=tally,
                total_votes=entry["total_votes"],
                tied=entry["tied"],
            )
        )
    return assignments
