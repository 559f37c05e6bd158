#!/usr/bin/env python3
"""Walk through corpus handling: segmentation, tokenization, ingestion."""

import json
import tempfile
from pathlib import Path

from aspectmine.corpus import ingest, segment, tokenize

print("== sentence segmentation ==")
for text in [
    "Great app. Love it!",
    "Loveeeeeeeeeeeeeeeeeeeeeeeee it",
    "update broke everything\nplease fix",
]:
    print(f"  {text!r} -> {segment(text)}")

print("\n== tokenization ==")
for sentence in ["I need video call feature.", "Great!!!", "dp & status", "nice \U0001f44d app"]:
    norms = [t.norm for t in tokenize(sentence)]
    print(f"  {sentence!r} -> {norms}")

print("\n== elongation collapsing (off by default) ==")
print("  default:  ", [t.norm for t in tokenize("loveeeee it")])
print("  collapsed:", [t.norm for t in tokenize("loveeeee it", collapse_elongation=True)])

print("\n== ingestion with rejects ==")
rows = [
    {"entity": "beeper", "review_id": "1", "text": "Solid app. The video call is great."},
    {"entity": "beeper", "review_id": "1", "text": "duplicate id, rejected"},
    {"entity": "lingo", "review_id": "1", "text": "The update is terrible.", "rating": 1},
    {"entity": "lingo", "review_id": "2", "rating": 5},
]
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "reviews.jsonl"
    path.write_text("\n".join(json.dumps(r) for r in rows), encoding="utf-8")
    corpus = ingest(path)
    print("  review counts:", corpus.review_counts())
    print("  rejects:", [(r.line, r.reason) for r in corpus.rejects])
    for sentence in corpus.build_sentences():
        print(f"  {sentence.review_ref} #{sentence.index}: {sentence.norms}")
