from aspectmine import data_path
from aspectmine.synth import (
    ENTITIES,
    PLANTED,
    assignments_json,
    categories_json,
    generate_reviews,
    gold_csv,
    reviews_jsonl,
    votes_csv,
)


def test_generator_deterministic():
    assert generate_reviews() == generate_reviews()
    assert reviews_jsonl() == reviews_jsonl()


def test_bundled_files_match_generator():
    synth = data_path("synthetic")
    assert synth.joinpath("reviews.jsonl").read_text(encoding="utf-8") == reviews_jsonl()
    assert synth.joinpath("categories.json").read_text(encoding="utf-8") == categories_json()
    assert synth.joinpath("assignments.json").read_text(encoding="utf-8") == assignments_json()
    assert synth.joinpath("gold.csv").read_text(encoding="utf-8") == gold_csv()
    assert synth.joinpath("votes.csv").read_text(encoding="utf-8") == votes_csv()


def test_corpus_shape():
    reviews = generate_reviews()
    assert len(reviews) == 500
    assert {r["entity"] for r in reviews} == set(ENTITIES)
    ids = {(r["entity"], r["review_id"]) for r in reviews}
    assert len(ids) == 500


def test_planted_aspects_shape():
    assert len(PLANTED) == 10
    assert sum(1 for a in PLANTED if a.skew == "pos") == 5
    assert sum(1 for a in PLANTED if a.skew == "neg") == 5
    # every aspect phrase appears in the generated text
    text = " ".join(r["text"] for r in generate_reviews())
    for aspect in PLANTED:
        assert " ".join(aspect.words) in text
