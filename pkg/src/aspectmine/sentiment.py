"""Distance-weighted lexicon sentiment scoring for aspect terms.

Scores accumulate as exact rationals (every contribution is 1/d for an
integer token distance d), so sums are order-independent and per-entity
normalization is exactly invariant under corpus duplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import Sentence
from .miner import AspectCategory, AspectTerm, find_runs


class LexiconError(ValueError):
    """Raised when a lexicon file cannot be read or parsed."""


@dataclass(frozen=True)
class OpinionLexicon:
    positive: frozenset[str]
    negative: frozenset[str]

    def polarity(self, norm: str) -> int:
        if norm in self.positive:
            return 1
        if norm in self.negative:
            return -1
        return 0


def _read_word_list(path: str | Path) -> set[str]:
    words: set[str] = set()
    try:
        with open(path, "r", encoding="utf-8", errors="replace") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith(";"):
                    continue
                words.add(line.lower())
    except OSError as exc:
        raise LexiconError(f"cannot read lexicon file {path}: {exc}") from exc
    return words


def load_lexicon(pos_path: str | Path, neg_path: str | Path) -> OpinionLexicon:
    """Load plain word lists (one word per line, `;` starts a comment).
    Words claimed by both lists are dropped from both."""
    positive = _read_word_list(pos_path)
    negative = _read_word_list(neg_path)
    overlap = positive & negative
    return OpinionLexicon(positive=frozenset(positive - overlap), negative=frozenset(negative - overlap))


def find_occurrences(norms: Sequence[str], aspect_words: Sequence[str]) -> list[tuple[int, int]]:
    """[start, end) spans where the aspect's word sequence appears contiguously."""
    return find_runs(norms, aspect_words)


def score_sentence(
    norms: Sequence[str],
    aspect_words: Sequence[str],
    lexicon: OpinionLexicon,
) -> tuple[Fraction, Fraction]:
    """Positive and negative magnitudes contributed by one sentence.

    Each sentiment token outside the aspect span adds 1/dist to its side,
    where dist is the token distance to the nearest aspect token over the
    nearest occurrence, floored at 1.
    """
    occurrences = find_occurrences(norms, aspect_words)
    if not occurrences:
        return Fraction(0), Fraction(0)
    span_positions = {p for start, end in occurrences for p in range(start, end)}
    positive = Fraction(0)
    negative = Fraction(0)
    for j, word in enumerate(norms):
        if j in span_positions:
            continue
        polarity = lexicon.polarity(word)
        if polarity == 0:
            continue
        dist = max(1, min(abs(j - p) for p in span_positions))
        if polarity > 0:
            positive += Fraction(1, dist)
        else:
            negative += Fraction(1, dist)
    return positive, negative


@dataclass
class ScorePair:
    positive: Fraction = field(default_factory=lambda: Fraction(0))
    negative: Fraction = field(default_factory=lambda: Fraction(0))

    def add(self, pos: Fraction, neg: Fraction) -> None:
        self.positive += pos
        self.negative += neg

    def as_floats(self) -> tuple[float, float]:
        return float(self.positive), float(self.negative)


@dataclass
class ScoreSet:
    """Aggregated scores: per term, per category, and per (entity, x) slices."""

    term: dict[tuple[str, ...], ScorePair]
    category: dict[str, ScorePair]
    entity_term: dict[str, dict[tuple[str, ...], ScorePair]]
    entity_category: dict[str, dict[str, ScorePair]]


def score_corpus(
    sentences: Iterable[Sentence],
    terms: Sequence[AspectTerm],
    categories: Sequence[AspectCategory],
    lexicon: OpinionLexicon,
) -> ScoreSet:
    """Score every aspect term over every sentence mentioning it.

    A sentence mentioning several terms contributes to each independently;
    category scores are the sums over their member terms, overall and within
    each entity.
    """
    term_scores: dict[tuple[str, ...], ScorePair] = {t.words: ScorePair() for t in terms}
    entity_term: dict[str, dict[tuple[str, ...], ScorePair]] = {}
    for sent in sentences:
        entity = sent.review_ref[0]
        per_entity = entity_term.get(entity)
        if per_entity is None:
            per_entity = entity_term[entity] = {t.words: ScorePair() for t in terms}
        norms = sent.norms
        for term in terms:
            pos, neg = score_sentence(norms, term.words, lexicon)
            if pos or neg:
                term_scores[term.words].add(pos, neg)
                per_entity[term.words].add(pos, neg)

    category_scores: dict[str, ScorePair] = {}
    entity_category: dict[str, dict[str, ScorePair]] = {e: {} for e in entity_term}
    for cat in categories:
        total = ScorePair()
        for member in cat.members:
            pair = term_scores.get(member)
            if pair is not None:
                total.add(pair.positive, pair.negative)
        category_scores[cat.category_id] = total
        for entity, per_entity in entity_term.items():
            etotal = ScorePair()
            for member in cat.members:
                pair = per_entity.get(member)
                if pair is not None:
                    etotal.add(pair.positive, pair.negative)
            entity_category[entity][cat.category_id] = etotal

    return ScoreSet(
        term=term_scores,
        category=category_scores,
        entity_term=entity_term,
        entity_category=entity_category,
    )


def normalize_per_entity(pair: ScorePair, review_count: int) -> tuple[Fraction, Fraction] | None:
    """Divide both magnitudes by the entity's review count; None when the
    entity has no reviews (reported as empty downstream)."""
    if review_count == 0:
        return None
    if review_count < 0:
        raise ValueError(f"review_count must be >= 0, got {review_count}")
    return pair.positive / review_count, pair.negative / review_count


def merge_score_sets(parts: Sequence[ScoreSet]) -> ScoreSet:
    """Combine partial score sets; exact rational sums make the merge
    independent of partitioning and order."""
    merged = ScoreSet(term={}, category={}, entity_term={}, entity_category={})

    def _add(target: dict, source: dict) -> None:
        for key, pair in source.items():
            slot = target.setdefault(key, ScorePair())
            slot.add(pair.positive, pair.negative)

    for part in parts:
        _add(merged.term, part.term)
        _add(merged.category, part.category)
        for entity, per in part.entity_term.items():
            _add(merged.entity_term.setdefault(entity, {}), per)
        for entity, per in part.entity_category.items():
            _add(merged.entity_category.setdefault(entity, {}), per)
    return merged


def _score_chunk(args) -> ScoreSet:
    sentences, terms, categories, lexicon = args
    return score_corpus(sentences, terms, categories, lexicon)


def score_corpus_parallel(
    sentences: Sequence[Sentence],
    terms: Sequence[AspectTerm],
    categories: Sequence[AspectCategory],
    lexicon: OpinionLexicon,
    jobs: int = 1,
) -> ScoreSet:
    """Same result as score_corpus, optionally fanned out over processes."""
    if jobs <= 1 or len(sentences) < 2 * jobs:
        return score_corpus(sentences, terms, categories, lexicon)
    from concurrent.futures import ProcessPoolExecutor

    step = (len(sentences) + jobs - 1) // jobs
    chunks = [sentences[i : i + step] for i in range(0, len(sentences), step)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_score_chunk, [(c, terms, categories, lexicon) for c in chunks]))
    return merge_score_sets(parts)
