import random
from fractions import Fraction

import pytest

from aspectmine.corpus import Sentence, tokenize
from aspectmine.miner import AspectCategory, AspectTerm
from aspectmine.sentiment import (
    LexiconError,
    OpinionLexicon,
    ScorePair,
    find_occurrences,
    load_lexicon,
    normalize_per_entity,
    score_corpus,
    score_sentence,
)

from oracles import brute_force_score

LEX = OpinionLexicon(
    positive=frozenset({"great", "good", "love", "nice", "awesome"}),
    negative=frozenset({"blurry", "bad", "terrible", "awful", "buggy"}),
)


def sent(text, entity="A", rid="r", idx=0):
    return Sentence(review_ref=(entity, rid), index=idx, tokens=tuple(tokenize(text)))


class TestLoadLexicon:
    def test_sizes(self, tmp_path):
        p = tmp_path / "p.txt"
        n = tmp_path / "n.txt"
        p.write_text("good\ngreat\n", encoding="utf-8")
        n.write_text("bad\n", encoding="utf-8")
        lex = load_lexicon(p, n)
        assert (len(lex.positive), len(lex.negative)) == (2, 1)

    def test_conflicts_dropped_from_both(self, tmp_path):
        p = tmp_path / "p.txt"
        n = tmp_path / "n.txt"
        p.write_text("funny\ngood\n", encoding="utf-8")
        n.write_text("funny\nbad\n", encoding="utf-8")
        lex = load_lexicon(p, n)
        assert "funny" not in lex.positive and "funny" not in lex.negative
        assert lex.polarity("funny") == 0

    def test_comment_lines_skipped(self, tmp_path):
        p = tmp_path / "p.txt"
        n = tmp_path / "n.txt"
        p.write_text("; header\n; more\n; still\ngood\n\ngreat\n", encoding="utf-8")
        n.write_text("bad\n", encoding="utf-8")
        lex = load_lexicon(p, n)
        assert (len(lex.positive), len(lex.negative)) == (2, 1)

    def test_missing_file_fatal(self, tmp_path):
        with pytest.raises(LexiconError):
            load_lexicon(tmp_path / "nope.txt", tmp_path / "nope2.txt")


class TestScoreSentence:
    def test_camera_example(self):
        norms = ["great", "camera", "but", "blurry", "video"]
        assert score_sentence(norms, ["camera"], LEX) == (Fraction(1), Fraction(1, 2))

    def test_video_example(self):
        norms = ["great", "camera", "but", "blurry", "video"]
        assert score_sentence(norms, ["video"], LEX) == (Fraction(1, 4), Fraction(1))

    def test_no_sentiment_words(self):
        assert score_sentence(["the", "app", "is"], ["app"], LEX) == (0, 0)

    def test_sentiment_inside_span_skipped(self):
        norms = ["great", "wall", "is", "bad"]
        pos, neg = score_sentence(norms, ["great", "wall"], LEX)
        assert pos == 0
        assert neg == Fraction(1, 2)

    def test_nearest_occurrence_used(self):
        norms = ["camera", "x", "x", "x", "great", "x", "camera"]
        pos, neg = score_sentence(norms, ["camera"], LEX)
        assert pos == Fraction(1, 2)  # nearer occurrence at distance 2

    def test_matches_brute_force_on_randomized_sentences(self):
        rng = random.Random(1234)
        vocab = ["great", "bad", "camera", "video", "x", "y", "love", "terrible", "app"]
        checked = 0
        for _ in range(60):
            norms = [rng.choice(vocab) for _ in range(rng.randint(1, 12))]
            aspect = rng.choice([["camera"], ["video"], ["camera", "video"], ["app"]])
            got = score_sentence(norms, aspect, LEX)
            want = brute_force_score(norms, aspect, LEX)
            assert got == want
            checked += 1
        assert checked == 60

    def test_contribution_magnitude_bounded(self):
        rng = random.Random(99)
        vocab = ["great", "bad", "app", "x"]
        for _ in range(50):
            norms = [rng.choice(vocab) for _ in range(rng.randint(1, 10))]
            pos, neg = score_sentence(norms, ["app"], LEX)
            n_pos = sum(1 for w in norms if w == "great")
            n_neg = sum(1 for w in norms if w == "bad")
            assert pos <= n_pos and neg <= n_neg


class TestScoreCorpus:
    TERMS = [AspectTerm(words=("camera",), occurrence_count=1)]
    CATS = [AspectCategory(category_id="cam", label="camera", members=(("camera",),))]

    def test_single_sentence(self):
        scores = score_corpus([sent("great camera")], self.TERMS, self.CATS, LEX)
        assert scores.term[("camera",)].as_floats() == (1.0, 0.0)

    def test_additivity_on_duplicate(self):
        sentences = [sent("great camera"), sent("great camera", rid="r2")]
        scores = score_corpus(sentences, self.TERMS, self.CATS, LEX)
        assert scores.term[("camera",)].as_floats() == (2.0, 0.0)

    def test_member_sum_matches_reference_total(self):
        # frozen benchmark row: member pairs (200, 50) + (93.525, 18.054)
        total = ScorePair()
        total.add(Fraction(200), Fraction(50))
        total.add(Fraction("93.525"), Fraction("18.054"))
        assert total.as_floats() == (293.525, 68.054)

    def test_category_sums_members(self):
        terms = [
            AspectTerm(words=("sticker",), occurrence_count=1),
            AspectTerm(words=("emoji",), occurrence_count=1),
        ]
        cats = [AspectCategory(category_id="st", label="sticker, emoji", members=(("sticker",), ("emoji",)))]
        sentences = [sent("love sticker"), sent("nice emoji", rid="r2"), sent("bad emoji", rid="r3")]
        scores = score_corpus(sentences, terms, cats, LEX)
        member_sum = ScorePair()
        for t in terms:
            member_sum.add(scores.term[t.words].positive, scores.term[t.words].negative)
        assert scores.category["st"].positive == member_sum.positive
        assert scores.category["st"].negative == member_sum.negative

    def test_partition_additivity(self):
        sentences = [sent(f"great camera {i}", rid=f"r{i}") for i in range(6)]
        sentences += [sent(f"blurry camera {i}", rid=f"n{i}") for i in range(4)]
        whole = score_corpus(sentences, self.TERMS, self.CATS, LEX).term[("camera",)]
        first = score_corpus(sentences[:5], self.TERMS, self.CATS, LEX).term[("camera",)]
        second = score_corpus(sentences[5:], self.TERMS, self.CATS, LEX).term[("camera",)]
        assert whole.positive == first.positive + second.positive
        assert whole.negative == first.negative + second.negative

    def test_per_entity_slices(self):
        sentences = [sent("great camera", entity="A"), sent("blurry camera", entity="B", rid="r2")]
        scores = score_corpus(sentences, self.TERMS, self.CATS, LEX)
        assert scores.entity_term["A"][("camera",)].as_floats() == (1.0, 0.0)
        assert scores.entity_term["B"][("camera",)].as_floats() == (0.0, 1.0)
        assert scores.entity_category["A"]["cam"].as_floats() == (1.0, 0.0)


class TestNormalize:
    def test_division(self):
        pair = ScorePair(positive=Fraction(664893, 1000), negative=Fraction(224012, 1000))
        normalized = normalize_per_entity(pair, 10000)
        assert normalized is not None
        pos, neg = normalized
        assert float(pos) == pytest.approx(0.0664893)
        assert float(neg) == pytest.approx(0.0224012)
        # display layer multiplies by 1e4
        assert float(pos) * 10_000 == pytest.approx(664.893)

    def test_zero_scores(self):
        assert normalize_per_entity(ScorePair(), 5) == (0, 0)

    def test_zero_reviews_undefined(self):
        assert normalize_per_entity(ScorePair(), 0) is None

    def test_duplication_invariance_exact(self):
        pair = ScorePair(positive=Fraction(7, 3), negative=Fraction(5, 4))
        doubled = ScorePair(positive=pair.positive * 2, negative=pair.negative * 2)
        assert normalize_per_entity(pair, 7) == normalize_per_entity(doubled, 14)


class TestFindOccurrences:
    def test_multiword(self):
        assert find_occurrences(["a", "video", "call", "b"], ["video", "call"]) == [(1, 3)]

    def test_repeated(self):
        assert find_occurrences(["app", "x", "app"], ["app"]) == [(0, 1), (2, 3)]

    def test_absent(self):
        assert find_occurrences(["a", "b"], ["c"]) == []
