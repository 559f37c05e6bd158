#!/usr/bin/env python3
"""Kano bucketization: load survey votes, tally majorities, show tie handling."""

from aspectmine import data_path
from aspectmine.kano import BUCKET_ORDER, SurveyVote, assign_all, load_votes, majority

categories = [
    "video_call", "group_chat", "voice_message", "dark_mode", "sticker",
    "update", "battery", "notification", "login", "backup",
]
votes, rejects = load_votes(data_path("synthetic", "votes.csv"), known_category_ids=categories)
print(f"loaded {len(votes)} votes, {len(rejects)} rejected")

print("\nmajority assignments:")
for a in assign_all(votes, categories):
    tallies = ", ".join(f"{b.value}={a.tally[b]}" for b in BUCKET_ORDER if a.tally[b])
    flag = "  (tie!)" if a.tied else ""
    print(f"  {a.category_id:15s} -> {a.bucket.value:15s} [{tallies}]{flag}")

print("\ntie example: 2 votes each for must_have and delighter")
tie_votes = [
    SurveyVote("s1", "c", BUCKET_ORDER[0]), SurveyVote("s2", "c", BUCKET_ORDER[0]),
    SurveyVote("s3", "c", BUCKET_ORDER[2]), SurveyVote("s4", "c", BUCKET_ORDER[2]),
]
a = majority("c", tie_votes)
print(f"  winner={a.bucket.value} tied={a.tied} (bucket priority breaks ties deterministically)")
