#!/usr/bin/env python3
"""Spin up the survey service, submit a scripted ballot over HTTP, and watch
the tally converge; the vote log survives a restart."""

import json
import tempfile
import threading
import urllib.request
from pathlib import Path

from aspectmine.corpus import ingest
from aspectmine.miner import load_categories
from aspectmine import data_path
from aspectmine.server import build_survey_config, make_server


def get(url):
    with urllib.request.urlopen(url, timeout=5) as resp:
        return json.loads(resp.read().decode("utf-8"))


def post(url, payload):
    req = urllib.request.Request(url, data=json.dumps(payload).encode("utf-8"), method="POST")
    req.add_header("Content-Type", "application/json")
    try:
        with urllib.request.urlopen(req, timeout=5) as resp:
            return resp.status
    except urllib.error.HTTPError as err:
        return err.code


categories = load_categories(data_path("synthetic", "categories.json")).categories
sentences = ingest(data_path("synthetic", "reviews.jsonl")).build_sentences()
config = build_survey_config(categories, sentences, survey_id="demo")

with tempfile.TemporaryDirectory() as tmp:
    log = Path(tmp) / "votes.jsonl"
    server = make_server(0, config, log)
    threading.Thread(target=server.serve_forever, daemon=True).start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    print(f"serving on {base}")

    listing = get(f"{base}/api/categories")
    print(f"{len(listing)} categories; first: {listing[0]['label']!r} "
          f"with snippets {listing[0]['sample_snippets'][:1]}")

    print("\nthree subjects vote on the first category:")
    for subject, bucket in [("ada", "must_have"), ("bob", "must_have"), ("cyd", "delighter")]:
        status = post(f"{base}/api/votes", {
            "subject_id": subject, "category_id": listing[0]["category_id"], "bucket": bucket,
        })
        print(f"  {subject} voted {bucket}: HTTP {status}")
    dup = post(f"{base}/api/votes", {
        "subject_id": "ada", "category_id": listing[0]["category_id"], "bucket": "reverse",
    })
    print(f"  ada votes again: HTTP {dup} (duplicates are rejected)")

    tally = get(f"{base}/api/tally")[0]
    print(f"\ntally: {tally['tally']} -> assigned {tally['assigned_bucket']} (tied={tally['tied']})")

    server.shutdown()
    server.server_close()

    reborn = make_server(0, config, log)
    threading.Thread(target=reborn.serve_forever, daemon=True).start()
    base = f"http://127.0.0.1:{reborn.server_address[1]}"
    total = get(f"{base}/api/tally")[0]["total_votes"]
    print(f"after restart the replayed log still shows {total} votes")
    reborn.shutdown()
    reborn.server_close()
