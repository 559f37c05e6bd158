"""Dictionary-based POS tagging and noun-phrase chunking.

The tagger is intentionally noun-biased: anything not covered by the embedded
dictionary or a suffix heuristic is tagged NOUN, which maximizes aspect recall
and leaves false candidates to the miner's frequency thresholds. An external
word/tag file can be merged over the embedded dictionary.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import Token
from .tagwords import WORD_TAGS


class PosTag(Enum):
    NOUN = "NOUN"
    PROPER_NOUN = "PROPER_NOUN"
    ADJ = "ADJ"
    DET = "DET"
    VERB = "VERB"
    ADV = "ADV"
    PREP = "PREP"
    PRON = "PRON"
    OTHER = "OTHER"


NOUN_TAGS = frozenset({PosTag.NOUN, PosTag.PROPER_NOUN})


@dataclass(frozen=True)
class NounPhrase:
    """A chunk of one sentence.

    span is the [start, end) token range; terms are the norm forms of the
    content tokens (determiners excluded), with tags aligned to terms.
    """

    span: tuple[int, int]
    terms: tuple[str, ...]
    tags: tuple[PosTag, ...]
    sentence_ref: tuple[str, str, int] | None = None

    def with_ref(self, ref: tuple[str, str, int]) -> "NounPhrase":
        return NounPhrase(span=self.span, terms=self.terms, tags=self.tags, sentence_ref=ref)


def load_tag_lexicon(path: str | Path) -> dict[str, PosTag]:
    """Read `word<TAB>tag` override lines; blank lines and #-comments skipped."""
    overrides: dict[str, PosTag] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'word<TAB>tag'")
            word, tag = parts
            try:
                overrides[word.strip().lower()] = PosTag(tag.strip().upper())
            except ValueError:
                raise ValueError(f"{path}:{lineno}: unknown tag {tag!r}") from None
    return overrides


class Tagger:
    """Stateless after construction; safe to share across threads."""

    def __init__(self, overrides: dict[str, PosTag] | None = None) -> None:
        self._table: dict[str, PosTag] = {w: PosTag(t) for w, t in WORD_TAGS.items()}
        if overrides:
            self._table.update(overrides)

    def tag_word(self, norm: str) -> PosTag:
        tag = self._table.get(norm)
        if tag is not None:
            return tag
        if norm.isdigit():
            return PosTag.OTHER
        if len(norm) > 4 and norm.endswith("ing"):
            return PosTag.VERB
        if len(norm) > 3 and norm.endswith("ly"):
            return PosTag.ADV
        return PosTag.NOUN

    def tag(self, tokens: Sequence[Token]) -> list[tuple[Token, PosTag]]:
        return [(t, self.tag_word(t.norm)) for t in tokens]


def chunk(tagged: Sequence[tuple[Token, PosTag]], coalesce: bool = True) -> list[NounPhrase]:
    """Extract maximal noun phrases: DET? ADJ* (NOUN|PROPER_NOUN)+.

    With coalesce on, `NP PREP NP` runs merge into a single phrase whose terms
    keep the preposition but drop determiners, so spans like
    "end to end encryption" survive as one unit.
    """
    tags = [tag for _, tag in tagged]
    norms = [tok.norm for tok, _ in tagged]
    core: list[NounPhrase] = []
    i = 0
    n = len(tagged)
    while i < n:
        j = i
        if tags[j] is PosTag.DET:
            j += 1
        while j < n and tags[j] is PosTag.ADJ:
            j += 1
        k = j
        while k < n and tags[k] in NOUN_TAGS:
            k += 1
        if k > j:
            terms = tuple(norms[p] for p in range(i, k) if tags[p] is not PosTag.DET)
            term_tags = tuple(tags[p] for p in range(i, k) if tags[p] is not PosTag.DET)
            core.append(NounPhrase(span=(i, k), terms=terms, tags=term_tags))
            i = k
        else:
            i += 1

    if not coalesce:
        return core

    merged: list[NounPhrase] = []
    idx = 0
    while idx < len(core):
        cur = core[idx]
        while idx + 1 < len(core):
            nxt = core[idx + 1]
            bridge = cur.span[1]
            if nxt.span[0] == bridge + 1 and tags[bridge] is PosTag.PREP:
                cur = NounPhrase(
                    span=(cur.span[0], nxt.span[1]),
                    terms=cur.terms + (norms[bridge],) + nxt.terms,
                    tags=cur.tags + (PosTag.PREP,) + nxt.tags,
                )
                idx += 1
            else:
                break
        merged.append(cur)
        idx += 1
    return merged


def extract_noun_phrases(
    sentences: Iterable,
    tagger: Tagger | None = None,
    coalesce: bool = True,
) -> list[NounPhrase]:
    """Tag and chunk every sentence, attaching sentence references."""
    tagger = tagger or Tagger()
    phrases: list[NounPhrase] = []
    for sent in sentences:
        ref = (sent.review_ref[0], sent.review_ref[1], sent.index)
        for np in chunk(tagger.tag(sent.tokens), coalesce=coalesce):
            phrases.append(np.with_ref(ref))
    return phrases
