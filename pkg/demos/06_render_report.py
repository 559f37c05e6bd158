#!/usr/bin/env python3
"""Build the two summary tables from frozen category scores and render them."""

import tempfile
from fractions import Fraction
from pathlib import Path

from aspectmine.kano import BUCKET_ORDER, BucketAssignment, KanoBucket
from aspectmine.miner import AspectCategory
from aspectmine.report import bar, overall_table, render, render_overall_md
from aspectmine.sentiment import ScorePair

ROWS = [
    ("sms_chat", "sms, message, text, chat", KanoBucket.MUST_HAVE, 664.893, 224.012),
    ("freeze", "freeze, restart", KanoBucket.MUST_HAVE, 23.315, 204.577),
    ("sticker", "sticker, emoji", KanoBucket.DELIGHTER, 293.525, 68.054),
    ("last_seen", "last seen", KanoBucket.DELIGHTER, 0.0, 0.0),
    ("offers", "offer, spin", KanoBucket.INDIFFERENT, 10.738, 2.222),
    ("phone_number", "phone number", KanoBucket.REVERSE, 0.0, 0.0),
]

categories = [AspectCategory(category_id=cid, label=label, members=((cid,),)) for cid, label, *_ in ROWS]
assignments = [
    BucketAssignment(cid, bucket, {b: int(b is bucket) for b in BUCKET_ORDER}, 1, False)
    for cid, _, bucket, *_ in ROWS
]
scores = {
    cid: ScorePair(
        positive=Fraction(str(pos)),
        negative=Fraction(str(neg)),
    )
    for cid, _, _, pos, neg in ROWS
}

print("positive-share bars (empty when a category drew no sentiment):")
for cid, label, _, pos, neg in ROWS:
    b = bar(pos, neg)
    shown = f"{b.fraction:.2f}" if not b.empty else "(empty)"
    print(f"  {label:30s} {pos:8.3f} / {neg:8.3f} -> {shown}")

table = overall_table(assignments, scores, categories)
print("\nmarkdown rendering:\n")
print(render_overall_md(table))

with tempfile.TemporaryDirectory() as tmp:
    written = render(table, None, "html", Path(tmp))
    print(f"html report written to {written[0]} ({written[0].stat().st_size} bytes)")
