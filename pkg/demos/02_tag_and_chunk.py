#!/usr/bin/env python3
"""Show the dictionary tagger and the noun-phrase grammar, including the
prepositional coalescing that keeps spans like 'end to end encryption' whole."""

from aspectmine.corpus import tokenize
from aspectmine.tagger import Tagger, chunk

tagger = Tagger()

SENTENCES = [
    "i love the new video call feature",
    "the app needs end to end encryption",
    "great camera but blurry video",
    "the quality of the group chat is poor",
    "qwzrtx is unknown so it stays a noun",
]

for text in SENTENCES:
    tagged = tagger.tag(tokenize(text))
    print(f"\n{text}")
    print("  tags:   " + " ".join(f"{tok.norm}/{tag.value}" for tok, tag in tagged))
    for np in chunk(tagged):
        print(f"  chunk:  span={np.span} terms={list(np.terms)}")
    if not chunk(tagged):
        print("  chunk:  (none)")

print("\ncoalescing comparison for 'end to end encryption':")
tagged = tagger.tag(tokenize("end to end encryption"))
print("  on: ", [list(np.terms) for np in chunk(tagged, coalesce=True)])
print("  off:", [list(np.terms) for np in chunk(tagged, coalesce=False)])
