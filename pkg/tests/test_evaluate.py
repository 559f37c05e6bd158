import pytest

from aspectmine.evaluate import (
    GoldFeature,
    MatchResult,
    OverrideError,
    evaluation_matrix,
    load_gold,
    load_overrides,
    match,
    precision,
    recall,
)


def gold(name, aliases=(), entities=()):
    return GoldFeature(name=name, aliases=tuple(aliases), offered_by=frozenset(entities))


class TestMatch:
    def test_name_equality(self):
        result = match([gold("Sticker")], [("sticker",), ("emoji",)])
        assert result.pairs == [("Sticker", ("sticker",))]
        assert result.unmatched_extracted == [("emoji",)]

    def test_word_subset(self):
        result = match([gold("Sticker")], [("sticker", "emoji")])
        assert result.pairs == [("Sticker", ("sticker", "emoji"))]

    def test_unmatched_gold(self):
        result = match([gold("Photo Editing")], [("camera",)])
        assert result.unmatched_gold == ["Photo Editing"]

    def test_empty_extracted(self):
        result = match([gold("Sticker")], [])
        assert result.pairs == []
        assert result.unmatched_gold == ["Sticker"]

    def test_override_takes_precedence(self):
        features = [gold("Group Call"), gold("Group chat")]
        result = match(features, [("group",), ("group", "chat")], overrides=[("Group Call", "group")])
        assert ("Group Call", ("group",)) in result.pairs
        assert ("Group chat", ("group", "chat")) in result.pairs

    def test_override_unknown_gold_is_error(self):
        with pytest.raises(OverrideError):
            match([gold("Sticker")], [("sticker",)], overrides=[("Ghost", "sticker")])

    def test_one_to_one(self):
        features = [gold("Voice Call", aliases=["voice"]), gold("Voice Message", aliases=["voice"])]
        result = match(features, [("voice",)])
        assert len(result.pairs) == 1
        assert result.pairs[0][0] == "Voice Call"
        assert result.unmatched_gold == ["Voice Message"]

    def test_deterministic(self):
        features = [gold("A", aliases=["x"]), gold("B", aliases=["x", "y"])]
        extracted = [("x",), ("y",)]
        first = match(features, extracted)
        for _ in range(5):
            assert match(features, extracted) == first


class TestRecall:
    FEATURES = [
        gold("F1", entities=["E1", "E2"]),
        gold("F2", entities=["E1"]),
        gold("F3", entities=["E2"]),
    ]

    def result(self, matched):
        return MatchResult(pairs=[(m, (m.lower(),)) for m in matched], unmatched_gold=[], unmatched_extracted=[])

    def test_entity_scope(self):
        r = self.result(["F1"])
        assert recall(r, self.FEATURES, "E1") == pytest.approx(0.5)
        assert recall(r, self.FEATURES, "E2") == pytest.approx(0.5)

    def test_overall_scope(self):
        assert recall(self.result(["F1", "F2", "F3"]), self.FEATURES) == 1.0

    def test_empty_scope_undefined(self):
        assert recall(self.result([]), self.FEATURES, "E9") is None

    def test_unmatched_extracted_never_lowers_recall(self):
        r1 = self.result(["F1"])
        r2 = MatchResult(pairs=r1.pairs, unmatched_gold=[], unmatched_extracted=[("junk",)])
        assert recall(r1, self.FEATURES) == recall(r2, self.FEATURES)


class TestPrecision:
    def test_exact_fraction(self):
        p = precision(32, 19)
        assert p == pytest.approx(32 / 51)
        assert round(p * 100, 3) == 62.745

    def test_zero_tp(self):
        assert precision(0, 5) == 0.0

    def test_zero_fp(self):
        assert precision(7, 0) == 1.0

    def test_undefined(self):
        assert precision(0, 0) is None

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            precision(-1, 2)


class TestFiles:
    def test_gold_csv(self, tmp_path):
        path = tmp_path / "gold.csv"
        path.write_text(
            "name,aliases,entities\nVoice Call,voice|voice call,LINE|WhatsApp\n", encoding="utf-8"
        )
        features = load_gold(path)
        assert features == [
            GoldFeature(name="Voice Call", aliases=("voice", "voice call"), offered_by=frozenset({"LINE", "WhatsApp"}))
        ]

    def test_overrides_csv(self, tmp_path):
        path = tmp_path / "overrides.csv"
        path.write_text("gold_name,extracted_term\nGroup Call,group\n", encoding="utf-8")
        assert load_overrides(path) == [("Group Call", "group")]

    def test_matrix_renders(self):
        features = [gold("Sticker", entities=["E1"])]
        result = match(features, [("sticker",)])
        text = evaluation_matrix(features, result, ["E1"])
        assert "Sticker" in text and "100.00%" in text and "Precision" in text
