#!/usr/bin/env python3
"""Distance-weighted scoring walkthrough: each opinion word contributes
1/distance to the aspect's positive or negative side."""

from fractions import Fraction

from aspectmine import data_path
from aspectmine.sentiment import load_lexicon, score_sentence

lexicon = load_lexicon(
    data_path("lexicon", "positive-words.txt"),
    data_path("lexicon", "negative-words.txt"),
)
print(f"lexicon: {len(lexicon.positive)} positive, {len(lexicon.negative)} negative words")

norms = ["great", "camera", "but", "blurry", "video"]
print(f"\nsentence: {norms}")
for aspect in (["camera"], ["video"]):
    pos, neg = score_sentence(norms, aspect, lexicon)
    print(f"  aspect {aspect}: positive={pos} ({float(pos)}), negative={neg} ({float(neg)})")

print("\nwhy: for aspect ['camera'], 'great' sits 1 token away (+1/1) and")
print("'blurry' sits 2 away (-1/2); for ['video'] the distances swap roles.")

norms = ["the", "update", "is", "terrible", "and", "the", "update", "screen", "is", "ugly"]
pos, neg = score_sentence(norms, ["update"], lexicon)
print(f"\nrepeated aspect occurrences use the nearest one: {norms}")
print(f"  aspect ['update']: positive={pos}, negative={neg}")

pos, neg = score_sentence(["great", "wall", "is", "bad"], ["great", "wall"], lexicon)
print("\nopinion words inside the aspect span are skipped:")
print(f"  aspect ['great','wall'] in ['great','wall','is','bad']: positive={pos}, negative={neg}")

exact = Fraction(1) + Fraction(1, 3) + Fraction(1, 7)
print(f"\nscores accumulate as exact fractions, e.g. 1 + 1/3 + 1/7 = {exact} (= {float(exact):.6f})")
