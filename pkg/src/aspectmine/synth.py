"""Deterministic synthetic review corpus with planted aspects.

Ten aspects are planted with a known sentiment skew (five leaning positive,
five leaning negative) across five fictional messenger apps. Multi-word
aspects always co-occur so their itemsets survive rule mining; single-word
aspects get a dedicated companion word so they show up inside at least one
rule without being absorbed by it.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

ENTITIES = ["beeper", "chatwave", "lingo", "pingo", "snapjot"]

SEED = 174523


@dataclass(frozen=True)
class PlantedAspect:
    words: tuple[str, ...]
    skew: str  # "pos" | "neg"
    companion: str | None  # single-word aspects only: a word seen only next to them
    bucket: str


PLANTED: list[PlantedAspect] = [
    PlantedAspect(("video", "call"), "pos", None, "must_have"),
    PlantedAspect(("group", "chat"), "pos", None, "must_have"),
    PlantedAspect(("voice", "message"), "pos", None, "one_dimensional"),
    PlantedAspect(("dark", "mode"), "pos", None, "delighter"),
    PlantedAspect(("sticker",), "pos", "pack", "delighter"),
    PlantedAspect(("update",), "neg", "version", "one_dimensional"),
    PlantedAspect(("battery",), "neg", "drain", "must_have"),
    PlantedAspect(("notification",), "neg", "sound", "one_dimensional"),
    PlantedAspect(("login",), "neg", "screen", "must_have"),
    PlantedAspect(("backup",), "neg", "file", "indifferent"),
]

POSITIVE_TEMPLATES = [
    "love the {a}.",
    "the {a} is great.",
    "the {a} works perfectly.",
    "really nice {a}.",
    "the new {a} is wonderful.",
    "the {a} is fast and reliable.",
    "awesome {a}!",
]

NEGATIVE_TEMPLATES = [
    "the {a} is terrible.",
    "the {a} keeps crashing.",
    "the {a} is broken again.",
    "worst {a} ever.",
    "the {a} is so slow and buggy.",
    "i hate the {a}.",
    "horrible {a}!",
]

COMPANION_TEMPLATES = [
    "the {a} {c} is fine.",
    "check the {a} {c} please.",
]

FILLERS = [
    "good app overall.",
    "i use it every day.",
    "please fix the bugs.",
    "works well on my phone.",
    "five stars from me.",
    "could be better.",
    "not bad at all.",
    "my friends use it too.",
    "keeps me connected.",
    "decent but heavy.",
]

SKEW_MAJORITY = 0.85  # share of sentences matching an aspect's planted lean


def _aspect_sentence(rng: random.Random, aspect: PlantedAspect) -> str:
    phrase = " ".join(aspect.words)
    lean_positive = aspect.skew == "pos"
    if rng.random() > SKEW_MAJORITY:
        lean_positive = not lean_positive
    template = rng.choice(POSITIVE_TEMPLATES if lean_positive else NEGATIVE_TEMPLATES)
    return template.format(a=phrase)


def _companion_sentence(rng: random.Random, aspect: PlantedAspect) -> str:
    template = rng.choice(COMPANION_TEMPLATES)
    return template.format(a=" ".join(aspect.words), c=aspect.companion)


def generate_reviews(n_reviews: int = 500, seed: int = SEED) -> list[dict]:
    """Reviews as JSONL-ready dicts; identical output for identical inputs."""
    rng = random.Random(seed)
    singles = [a for a in PLANTED if a.companion]
    reviews: list[dict] = []
    for i in range(n_reviews):
        entity = ENTITIES[i % len(ENTITIES)]
        sentences: list[str] = []
        for _ in range(rng.randint(1, 3)):
            roll = rng.random()
            if roll < 0.62:
                sentences.append(_aspect_sentence(rng, rng.choice(PLANTED)))
            elif roll < 0.70:
                sentences.append(_companion_sentence(rng, rng.choice(singles)))
            else:
                sentences.append(rng.choice(FILLERS))
        reviews.append(
            {
                "entity": entity,
                "review_id": f"{entity}-{i:04d}",
                "text": " ".join(sentences),
                "rating": rng.randint(1, 5),
            }
        )
    return reviews


def reviews_jsonl(n_reviews: int = 500, seed: int = SEED) -> str:
    return "".join(json.dumps(r, sort_keys=True) + "\n" for r in generate_reviews(n_reviews, seed))


def categories_json() -> str:
    payload = [
        {
            "category_id": "_".join(a.words),
            "label": " ".join(a.words),
            "members": [list(a.words)],
        }
        for a in PLANTED
    ]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def assignments_json() -> str:
    payload = [
        {"category_id": "_".join(a.words), "bucket": a.bucket}
        for a in PLANTED
    ]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def gold_csv() -> str:
    lines = ["name,aliases,entities"]
    for a in PLANTED:
        lines.append(f"{' '.join(a.words)},,{'|'.join(ENTITIES)}")
    return "\n".join(lines) + "\n"


def votes_csv(subjects: int = 31, seed: int = SEED) -> str:
    """A filled survey whose per-category majority equals the planted bucket."""
    rng = random.Random(seed + 1)
    buckets = ["must_have", "one_dimensional", "delighter", "indifferent", "reverse"]
    lines = ["subject_id,category_id,bucket"]
    for s in range(subjects):
        for a in PLANTED:
            if rng.random() < 0.7:
                choice = a.bucket
            else:
                choice = rng.choice([b for b in buckets if b != a.bucket])
            lines.append(f"subject{s:02d},{'_'.join(a.words)},{choice}")
    return "\n".join(lines) + "\n"


def write_bundle(out_dir: str | Path, n_reviews: int = 500, seed: int = SEED) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    files = {
        "reviews.jsonl": reviews_jsonl(n_reviews, seed),
        "categories.json": categories_json(),
        "assignments.json": assignments_json(),
        "gold.csv": gold_csv(),
        "votes.csv": votes_csv(seed=seed),
    }
    written = []
    for name, text in files.items():
        path = out / name
        path.write_text(text, encoding="utf-8")
        written.append(path)
    return written


if __name__ == "__main__":
    import sys

    target = sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent / "data" / "synthetic"
    for p in write_bundle(target):
        print(p)
