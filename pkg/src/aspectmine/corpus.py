"""Review corpus handling: JSONL ingestion, sentence segmentation, tokenization."""

from __future__ import annotations

import csv
import json
import re
import string
from dataclasses import dataclass
from pathlib import Path

SENTENCE_TERMINALS = frozenset(".!?")

_ELONGATION_RE = re.compile(r"([a-z])\1{2,}")


@dataclass(frozen=True)
class Token:
    """One word of a sentence.

    surface keeps the raw whitespace-delimited chunk; norm is the lowercased
    form with edge punctuation and non-ASCII characters removed. pos is the
    0-based position among kept tokens.
    """

    surface: str
    norm: str
    pos: int


@dataclass(frozen=True)
class Sentence:
    review_ref: tuple[str, str]  # (entity_id, review_id)
    index: int
    tokens: tuple[Token, ...]

    @property
    def norms(self) -> tuple[str, ...]:
        return tuple(t.norm for t in self.tokens)

    @property
    def text(self) -> str:
        return " ".join(t.surface for t in self.tokens)


@dataclass(frozen=True)
class Review:
    entity_id: str
    review_id: str
    text: str
    rating: int | None = None
    timestamp: str | None = None


@dataclass(frozen=True)
class Reject:
    line: int
    reason: str


class Corpus:
    """Accepted reviews grouped by entity, in input order, plus the rejects."""

    def __init__(self) -> None:
        self.reviews_by_entity: dict[str, list[Review]] = {}
        self.rejects: list[Reject] = []
        self._seen_ids: set[tuple[str, str]] = set()

    def add(self, review: Review) -> None:
        key = (review.entity_id, review.review_id)
        if key in self._seen_ids:
            raise ValueError(f"duplicate review_id {review.review_id!r} for entity {review.entity_id!r}")
        self._seen_ids.add(key)
        self.reviews_by_entity.setdefault(review.entity_id, []).append(review)

    @property
    def entities(self) -> list[str]:
        return list(self.reviews_by_entity)

    def review_counts(self) -> dict[str, int]:
        return {e: len(rs) for e, rs in self.reviews_by_entity.items()}

    def reviews(self) -> list[Review]:
        return [r for rs in self.reviews_by_entity.values() for r in rs]

    def build_sentences(self, collapse_elongation: bool = False) -> list[Sentence]:
        """Segment and tokenize every review. Sentences that tokenize to nothing
        are dropped; indices stay contiguous per review."""
        sentences: list[Sentence] = []
        for review in self.reviews():
            index = 0
            for raw in segment(review.text):
                tokens = tokenize(raw, collapse_elongation=collapse_elongation)
                if not tokens:
                    continue
                sentences.append(
                    Sentence(
                        review_ref=(review.entity_id, review.review_id),
                        index=index,
                        tokens=tuple(tokens),
                    )
                )
                index += 1
        return sentences


def segment(text: str) -> list[str]:
    """Split text into sentences on terminal punctuation (. ! ?) and newlines.

    Runs of terminal punctuation stay attached to their sentence, so every
    non-whitespace character of the input survives in the output.
    """
    segments: list[str] = []
    buf: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            segments.append("".join(buf))
            buf = []
            i += 1
        elif ch in SENTENCE_TERMINALS:
            while i < n and text[i] in SENTENCE_TERMINALS:
                buf.append(text[i])
                i += 1
            segments.append("".join(buf))
            buf = []
        else:
            buf.append(ch)
            i += 1
    segments.append("".join(buf))
    return [s for s in (seg.strip() for seg in segments) if s]


def normalize_word(raw: str, collapse_elongation: bool = False) -> str:
    """Lowercase a raw token, drop non-ASCII characters, strip edge punctuation."""
    ascii_only = raw.encode("ascii", "ignore").decode("ascii")
    norm = ascii_only.strip(string.punctuation).lower()
    if collapse_elongation:
        norm = _ELONGATION_RE.sub(r"\1\1", norm)
    return norm


def tokenize(sentence: str, collapse_elongation: bool = False) -> list[Token]:
    """Whitespace tokenization; tokens whose normalized form is empty
    (standalone punctuation, ampersands, emoji) are dropped."""
    tokens: list[Token] = []
    for raw in sentence.split():
        norm = normalize_word(raw, collapse_elongation=collapse_elongation)
        if not norm:
            continue
        tokens.append(Token(surface=raw, norm=norm, pos=len(tokens)))
    return tokens


def ingest(path: str | Path) -> Corpus:
    """Load a reviews JSONL file.

    Each line needs string keys `entity`, `review_id`, and a non-empty `text`;
    `rating` (int in [1,5]) and `timestamp` (string) are optional. Bad lines
    and duplicate review ids land in corpus.rejects and ingestion continues.
    """
    corpus = Corpus()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            reason = _ingest_line(corpus, line)
            if reason is not None:
                corpus.rejects.append(Reject(line=lineno, reason=reason))
    return corpus


def _ingest_line(corpus: Corpus, line: str) -> str | None:
    """Try to add one JSONL line; return a reject reason or None on success."""
    try:
        obj = json.loads(line)
    except json.JSONDecodeError:
        return "invalid json"
    if not isinstance(obj, dict):
        return "not an object"
    entity = obj.get("entity")
    review_id = obj.get("review_id")
    text = obj.get("text")
    if not isinstance(entity, str) or not entity:
        return "missing entity"
    if not isinstance(review_id, str) or not review_id:
        return "missing review_id"
    if not isinstance(text, str) or not text.strip():
        return "missing text"
    rating = obj.get("rating")
    if rating is not None:
        if isinstance(rating, bool) or not isinstance(rating, int) or not 1 <= rating <= 5:
            return "rating out of range"
    timestamp = obj.get("timestamp")
    if timestamp is not None and not isinstance(timestamp, str):
        return "timestamp not a string"
    if (entity, review_id) in corpus._seen_ids:
        return "duplicate review_id"
    corpus.add(Review(entity_id=entity, review_id=review_id, text=text, rating=rating, timestamp=timestamp))
    return None


def write_rejects(rejects: list[Reject], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["line", "reason"])
        for r in rejects:
            writer.writerow([r.line, r.reason])


def reviews_to_jsonl(corpus: Corpus, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for review in corpus.reviews():
            obj: dict = {"entity": review.entity_id, "review_id": review.review_id, "text": review.text}
            if review.rating is not None:
                obj["rating"] = review.rating
            if review.timestamp is not None:
                obj["timestamp"] = review.timestamp
            fh.write(json.dumps(obj, sort_keys=True) + "\n")


def sentences_to_jsonl(sentences: list[Sentence], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for s in sentences:
            obj = {
                "entity": s.review_ref[0],
                "review_id": s.review_ref[1],
                "index": s.index,
                "tokens": [[t.surface, t.norm] for t in s.tokens],
            }
            fh.write(json.dumps(obj, sort_keys=True) + "\n")


def sentences_from_jsonl(path: str | Path) -> list[Sentence]:
    sentences: list[Sentence] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            obj = json.loads(line)
            tokens = tuple(
                Token(surface=surf, norm=norm, pos=i) for i, (surf, norm) in enumerate(obj["tokens"])
            )
            sentences.append(
                Sentence(review_ref=(obj["entity"], obj["review_id"]), index=obj["index"], tokens=tokens)
            )
    return sentences
