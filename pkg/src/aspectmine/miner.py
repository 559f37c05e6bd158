"""Aspect mining: transactions from noun phrases, Apriori itemsets,
association rules, candidate pruning, and category grouping."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import Sentence
from .tagger import NounPhrase, PosTag


class MiningConfigError(ValueError):
    """Raised for out-of-range mining parameters."""


class CategoriesError(ValueError):
    """Raised for invalid category files (e.g. a member in two categories)."""


@dataclass(frozen=True)
class Transaction:
    items: frozenset[str]


@dataclass(frozen=True)
class ItemSet:
    items: tuple[str, ...]  # sorted
    support_count: int
    support: float


@dataclass(frozen=True)
class Rule:
    antecedent: tuple[str, ...]
    consequent: tuple[str, ...]
    support: float
    confidence: float

    @property
    def itemset(self) -> frozenset[str]:
        return frozenset(self.antecedent) | frozenset(self.consequent)


@dataclass(frozen=True)
class AspectTerm:
    words: tuple[str, ...]
    occurrence_count: int


@dataclass(frozen=True)
class AspectCategory:
    category_id: str
    label: str
    members: tuple[tuple[str, ...], ...]


def build_transactions(noun_phrases: Iterable[NounPhrase]) -> list[Transaction]:
    """One transaction per noun phrase: the unique content terms, with
    determiners already gone and prepositions dropped here."""
    transactions: list[Transaction] = []
    for np in noun_phrases:
        items = frozenset(t for t, tag in zip(np.terms, np.tags) if tag is not PosTag.PREP)
        if items:
            transactions.append(Transaction(items=items))
    return transactions


def mine_frequent(transactions: Sequence[Transaction], min_support: float) -> list[ItemSet]:
    """Levelwise Apriori. Returns exactly the itemsets whose support
    (fraction of transactions) is >= min_support, sorted by size then items."""
    if not 0 < min_support <= 1:
        raise MiningConfigError(f"min_support must be in (0, 1], got {min_support}")
    total = len(transactions)
    if total == 0:
        return []

    item_sets = [frozenset(t.items) for t in transactions]
    counts: dict[frozenset[str], int] = {}
    for items in item_sets:
        for item in items:
            key = frozenset([item])
            counts[key] = counts.get(key, 0) + 1

    frequent: dict[frozenset[str], int] = {
        s: c for s, c in counts.items() if c / total >= min_support
    }
    level = sorted(frequent, key=lambda s: tuple(sorted(s)))
    k = 2
    while level:
        candidates = _candidate_join(level, k)
        if not candidates:
            break
        level_counts = {c: 0 for c in candidates}
        for items in item_sets:
            for cand in candidates:
                if cand <= items:
                    level_counts[cand] += 1
        level = sorted(
            (c for c, n in level_counts.items() if n / total >= min_support),
            key=lambda s: tuple(sorted(s)),
        )
        for cand in level:
            frequent[cand] = level_counts[cand]
        k += 1

    return sorted(
        (ItemSet(items=tuple(sorted(s)), support_count=c, support=c / total) for s, c in frequent.items()),
        key=lambda it: (len(it.items), it.items),
    )


def _candidate_join(level: list[frozenset[str]], k: int) -> list[frozenset[str]]:
    """Join (k-1)-itemsets sharing a (k-2)-prefix; prune any candidate with an
    infrequent (k-1)-subset (downward closure)."""
    prev = set(level)
    ordered = [tuple(sorted(s)) for s in level]
    candidates: set[frozenset[str]] = set()
    for a, b in combinations(ordered, 2):
        if a[: k - 2] == b[: k - 2]:
            cand = frozenset(a) | frozenset(b)
            if len(cand) == k and all(frozenset(sub) in prev for sub in combinations(sorted(cand), k - 1)):
                candidates.add(cand)
    return sorted(candidates, key=lambda s: tuple(sorted(s)))


def generate_rules(itemsets: Sequence[ItemSet], min_confidence: float) -> list[Rule]:
    """All splits A -> C of each frequent itemset with
    confidence = support(A u C) / support(A) >= min_confidence."""
    if not 0 <= min_confidence <= 1:
        raise MiningConfigError(f"min_confidence must be in [0, 1], got {min_confidence}")
    count_by_set = {frozenset(it.items): it.support_count for it in itemsets}
    support_by_set = {frozenset(it.items): it.support for it in itemsets}
    rules: list[Rule] = []
    for it in itemsets:
        if len(it.items) < 2:
            continue
        full = frozenset(it.items)
        for r in range(1, len(it.items)):
            for ante in combinations(it.items, r):
                ante_set = frozenset(ante)
                confidence = count_by_set[full] / count_by_set[ante_set]
                if confidence >= min_confidence:
                    rules.append(
                        Rule(
                            antecedent=tuple(sorted(ante_set)),
                            consequent=tuple(sorted(full - ante_set)),
                            support=support_by_set[full],
                            confidence=confidence,
                        )
                    )
    rules.sort(key=lambda r: (r.antecedent, r.consequent))
    return rules


def count_sentences_with_words(sentences: Sequence[Sentence], words: frozenset[str]) -> int:
    """Number of sentences containing every word of `words` (any order)."""
    count = 0
    for sent in sentences:
        if words <= set(sent.norms):
            count += 1
    return count


def count_sentences_with_sequence(sentences: Sequence[Sentence], words: Sequence[str]) -> int:
    """Number of sentences containing `words` as a contiguous run."""
    count = 0
    for sent in sentences:
        if find_runs(sent.norms, words):
            count += 1
    return count


def find_runs(norms: Sequence[str], words: Sequence[str]) -> list[tuple[int, int]]:
    """All [start, end) positions where `words` appears contiguously."""
    runs: list[tuple[int, int]] = []
    k = len(words)
    if k == 0:
        return runs
    target = tuple(words)
    for i in range(len(norms) - k + 1):
        if tuple(norms[i : i + k]) == target:
            runs.append((i, i + k))
    return runs


def prune_singletons(
    rules: Sequence[Rule],
    sentences: Sequence[Sentence],
    threshold: int = 3,
    extra_words: Iterable[str] = (),
) -> list[AspectTerm]:
    """Keep a rule word as a single-word aspect when its own sentence count
    stands clear of its best-covered superset by more than `threshold`.

    Supersets of a word are the (size >= 2) itemsets of the rules containing
    it. `extra_words` admits additional candidates (frequent single items)
    that have no supersets, kept when their count alone beats the threshold.
    """
    if threshold < 0:
        raise MiningConfigError(f"threshold must be >= 0, got {threshold}")
    supersets: dict[str, set[frozenset[str]]] = {}
    for rule in rules:
        full = rule.itemset
        for word in full:
            supersets.setdefault(word, set())
            if len(full) >= 2:
                supersets[word].add(full)
    for word in extra_words:
        supersets.setdefault(word, set())

    word_count_cache: dict[str, int] = {}

    def word_count(w: str) -> int:
        if w not in word_count_cache:
            word_count_cache[w] = sum(1 for s in sentences if w in s.norms)
        return word_count_cache[w]

    kept: list[AspectTerm] = []
    for word in sorted(supersets):
        own = word_count(word)
        supers = supersets[word]
        if supers:
            best = max(count_sentences_with_words(sentences, s) for s in supers)
            keep = own - best > threshold
        else:
            keep = own > threshold
        if keep:
            kept.append(AspectTerm(words=(word,), occurrence_count=own))
    return kept


MULTIWORD_SIZE_CAP = 4


def validate_multiword(
    candidates: Iterable[frozenset[str]],
    sentences: Sequence[Sentence],
    max_gap: int = 2,
    min_sentences: int = 2,
) -> list[AspectTerm]:
    """Turn itemsets into ordered multi-word aspects by scanning the corpus.

    An occurrence is the shortest leftmost token run covering every item with
    at most `max_gap` foreign tokens between consecutive hits; the run itself
    (including any bridging words) becomes the candidate ordering. Orderings
    seen in at least `min_sentences` distinct sentences survive.
    """
    ordering_counts: dict[tuple[str, ...], int] = {}
    todo = sorted(
        {c for c in candidates if 2 <= len(c) <= MULTIWORD_SIZE_CAP},
        key=lambda s: tuple(sorted(s)),
    )
    for cand in todo:
        for sent in sentences:
            found = _orderings_in_sentence(sent.norms, cand, max_gap)
            for key in found:
                ordering_counts[key] = ordering_counts.get(key, 0) + 1

    return sorted(
        (
            AspectTerm(words=key, occurrence_count=n)
            for key, n in ordering_counts.items()
            if n >= min_sentences
        ),
        key=lambda t: (len(t.words), t.words),
    )


def _orderings_in_sentence(norms: Sequence[str], items: frozenset[str], max_gap: int) -> set[tuple[str, ...]]:
    """Distinct token runs in one sentence that cover `items` within gap bounds."""
    found: set[tuple[str, ...]] = set()
    i = 0
    n = len(norms)
    while i < n:
        if norms[i] not in items:
            i += 1
            continue
        end = _match_from(norms, i, items, max_gap)
        if end is None:
            i += 1
        else:
            found.add(tuple(norms[i : end + 1]))
            i = end + 1
    return found


def _match_from(norms: Sequence[str], start: int, items: frozenset[str], max_gap: int) -> int | None:
    needed = set(items)
    needed.discard(norms[start])
    j = start
    gap = 0
    while needed:
        j += 1
        if j >= len(norms):
            return None
        if norms[j] in needed:
            needed.discard(norms[j])
            gap = 0
        else:
            gap += 1
            if gap > max_gap:
                return None
    return j


def extract_aspects(
    rules: Sequence[Rule],
    sentences: Sequence[Sentence],
    frequent: Sequence[ItemSet] = (),
    threshold: int = 3,
    max_gap: int = 2,
    min_sentences: int = 2,
    include_frequent_singletons: bool = False,
) -> list[AspectTerm]:
    """Full pruning pass: singles from rule words, multi-words from rule
    itemsets validated in corpus order."""
    extra: list[str] = []
    if include_frequent_singletons:
        rule_words = {w for r in rules for w in r.itemset}
        extra = [it.items[0] for it in frequent if len(it.items) == 1 and it.items[0] not in rule_words]
    singles = prune_singletons(rules, sentences, threshold=threshold, extra_words=extra)
    multi_candidates = {r.itemset for r in rules if len(r.itemset) >= 2}
    multis = validate_multiword(multi_candidates, sentences, max_gap=max_gap, min_sentences=min_sentences)
    return sorted(set(singles) | set(multis), key=lambda t: (len(t.words), t.words))


@dataclass
class CategoriesResult:
    categories: list[AspectCategory]
    unknown_members: list[tuple[str, ...]]
    uncategorized_terms: list[tuple[str, ...]]


def load_categories(path: str | Path, mined_terms: Sequence[AspectTerm] | None = None) -> CategoriesResult:
    """Read the manual grouping file: a JSON array of
    {"category_id", "label", "members": [[word, ...], ...]}.

    A member claimed by two categories is an error; members that are not
    mined terms, and mined terms left uncategorized, are reported back.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    if not isinstance(raw, list):
        raise CategoriesError("categories file must be a JSON array")
    categories: list[AspectCategory] = []
    claimed: dict[tuple[str, ...], str] = {}
    for i, entry in enumerate(raw):
        try:
            category_id = entry["category_id"]
            label = entry["label"]
            raw_members = entry["members"]
        except (TypeError, KeyError) as exc:
            raise CategoriesError(f"category #{i}: missing field {exc}") from None
        if not raw_members:
            raise CategoriesError(f"category {category_id!r}: members must be non-empty")
        members: list[tuple[str, ...]] = []
        for m in raw_members:
            words = tuple(str(w).lower() for w in (m if isinstance(m, list) else str(m).split()))
            if words in claimed:
                raise CategoriesError(
                    f"member {' '.join(words)!r} appears in both {claimed[words]!r} and {category_id!r}"
                )
            claimed[words] = category_id
            members.append(words)
        categories.append(AspectCategory(category_id=category_id, label=label, members=tuple(members)))

    unknown: list[tuple[str, ...]] = []
    uncategorized: list[tuple[str, ...]] = []
    if mined_terms is not None:
        mined = {t.words for t in mined_terms}
        unknown = sorted(w for w in claimed if w not in mined)
        uncategorized = sorted(w for w in mined if w not in claimed)
    return CategoriesResult(categories=categories, unknown_members=unknown, uncategorized_terms=uncategorized)
