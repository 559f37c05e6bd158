#!/usr/bin/env python3
"""Evaluate an extracted-aspect list against the bundled messenger-app gold
feature benchmark and print the recall/precision matrix."""

from aspectmine import data_path
from aspectmine.evaluate import evaluation_matrix, load_gold, load_overrides, match

samples = data_path("samples")
gold = load_gold(samples / "messenger_gold.csv")
overrides = load_overrides(samples / "messenger_overrides.csv")
extracted = [
    tuple(line.split())
    for line in (samples / "messenger_extracted.txt").read_text().splitlines()
    if line.strip()
]

result = match(gold, extracted, overrides)
entities = ["LINE", "WhatsApp", "KIK", "HIKE", "snapchat"]
print(evaluation_matrix(gold, result, entities))

print("matching works in two passes: explicit overrides claim their terms")
print("first, then aliases (name words or extra aliases) match the remaining")
print("terms greedily, one extracted term per gold feature.")
